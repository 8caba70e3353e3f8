/*
 * Copyright 2026 The otplab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OTPLAB_ERRORS_H_
#define OTPLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace otplab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A box specification, strategy or truth table is malformed (partial maps,
// non-bit values, wrong sizes, unnormalized distributions).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The operation is undefined for the given (well-formed) input, e.g. a
// locality test on a signaling table.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A size guard was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A protocol state machine was driven out of order (instance reuse, Bob
// querying before Alice).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Text or JSON input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace otplab

#endif  // OTPLAB_ERRORS_H_
