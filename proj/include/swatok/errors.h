// Copyright 2026 The swatok Authors.
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

#ifndef SWATOK_ERRORS_H_
#define SWATOK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace swatok {

// Base class for every error raised by the library. The CLI maps the
// category to an exit status.
class Error : public std::runtime_error {
 public:
  enum class Category { kInvalidArgument, kIo, kData };

  Error(Category category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  Category category() const { return category_; }

 private:
  Category category_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error(Category::kInvalidArgument, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(Category::kIo, message) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& message)
      : Error(Category::kData, message) {}
};

// A syllable entry with a character outside the alphabet or a bad shape.
class MalformedEntry : public DataError {
 public:
  using DataError::DataError;
};

// A "-" grid placeholder left in an inventory override file.
class PlaceholderInData : public DataError {
 public:
  using DataError::DataError;
};

// Two different raw entries that normalize to the same syllable.
class DuplicateEntry : public DataError {
 public:
  using DataError::DataError;
};

class IdOutOfRange : public DataError {
 public:
  using DataError::DataError;
};

class EmptyCorpus : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace swatok

#endif  // SWATOK_ERRORS_H_
