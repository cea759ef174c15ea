// Copyright 2026 The binmat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BINMAT_ERRORS_HPP_
#define BINMAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace binmat {

// Root of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured point cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Input is beyond the size a search routine supports.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace binmat

#endif  // BINMAT_ERRORS_HPP_
