// Copyright 2026 The segcomb Authors
//
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

#ifndef SEGCOMB_ERROR_H_
#define SEGCOMB_ERROR_H_

#include <stdexcept>
#include <string>

namespace segcomb {

// Base class of every error raised by the library. The subclasses map
// one-to-one onto the command-line exit statuses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments or option combinations (exit status 1).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data (exit status 2).
class DataError : public Error {
 public:
  using Error::Error;
};

// A child process failed (exit status 3).
class ExternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace segcomb

#endif  // SEGCOMB_ERROR_H_
