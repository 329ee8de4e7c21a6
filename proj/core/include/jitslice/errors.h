// Copyright 2026 The jitslice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JITSLICE_ERRORS_H
#define JITSLICE_ERRORS_H

#include <stdexcept>
#include <string>

namespace jitslice {

/// An internal invariant failed during decoding or correction. Never counted
/// as a logical failure.
class ContractViolation : public std::logic_error {
   public:
    explicit ContractViolation(const std::string &what) : std::logic_error(what) {}
};

}  // namespace jitslice

#endif
