// Copyright 2026 The Credomain Authors
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

#ifndef CREDOMAIN_ERRORS_HPP_
#define CREDOMAIN_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace credomain {

// Base for every error raised by the library. The CLI maps these onto
// exit code 2 and prints what() verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed line in an N-Triples document.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(std::move(reason)) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownConcept : public Error {
 public:
  explicit UnknownConcept(const std::string& iri)
      : Error("unknown concept <" + iri + ">") {}
};

class MalformedPath : public Error {
 public:
  explicit MalformedPath(const std::string& path)
      : Error("malformed taxonomy path '" + path + "'") {}
};

class MissingFixture : public Error {
 public:
  explicit MissingFixture(const std::string& post_id)
      : Error("classifier fixture has no response for post '" + post_id + "'"),
        post_id_(post_id) {}
  const std::string& post_id() const { return post_id_; }

 private:
  std::string post_id_;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

class NotAnInstance : public Error {
 public:
  using Error::Error;
};

class QueryParseError : public Error {
 public:
  QueryParseError(std::size_t position, std::string reason)
      : Error("query position " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(std::move(reason)) {}

  std::size_t position() const { return position_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

class UnknownPrefix : public Error {
 public:
  explicit UnknownPrefix(const std::string& prefix)
      : Error("undeclared prefix '" + prefix + ":'"), prefix_(prefix) {}
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

class InvalidCounts : public Error {
 public:
  using Error::Error;
};

class MissingGold : public Error {
 public:
  explicit MissingGold(const std::string& post_id)
      : Error("no gold record for post '" + post_id + "'"), post_id_(post_id) {}
  const std::string& post_id() const { return post_id_; }

 private:
  std::string post_id_;
};

// File-level failure; the message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed record in a JSON Lines input; message carries file and line.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace credomain

#endif  // CREDOMAIN_ERRORS_HPP_
