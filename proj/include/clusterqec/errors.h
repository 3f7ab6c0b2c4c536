// Copyright 2026 The clusterqec Authors
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

#ifndef CLUSTERQEC_ERRORS_H
#define CLUSTERQEC_ERRORS_H

#include <stdexcept>
#include <string>

namespace clusterqec {

/// Operands disagree on qubit count (or bit-vector length).
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or physically/algebraically invalid input. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A configured enumeration or memory cap would be exceeded. The CLI maps this to exit code 3.
class ResourceLimit : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace clusterqec

#endif
