// Copyright 2026 The ixs Authors
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

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ixs {

// Error categories surfaced through the C API as status codes.
enum class ErrorKind {
  invalid_argument,
  parse,
  io,
  too_large,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

// Invariant checks that stay on in release builds; a failure means a bug in
// the solver, not bad user input.
#define IXS_CHECK(cond, msg)                                              \
  do {                                                                    \
    if (!(cond))                                                          \
      ::ixs::fail(::ixs::ErrorKind::internal,                             \
                  std::string("internal invariant violated: ") + (msg));  \
  } while (0)

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot open file for writing: " + path);
  out << text;
  if (!out) fail(ErrorKind::io, "write failed: " + path);
}

// Whitespace tokenizer used by the plain-text instance formats.
inline std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

class TokenReader {
 public:
  TokenReader(const std::string& text, std::string context)
      : toks_(tokenize(text)), context_(std::move(context)) {}

  bool done() const { return pos_ >= toks_.size(); }

  long long next_int(const std::string& what) {
    const std::string& t = next_token(what);
    try {
      size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      fail(ErrorKind::parse,
           context_ + ": expected integer for " + what + ", got '" + t + "'");
    }
  }

  unsigned long long next_uint64(const std::string& what) {
    const std::string& t = next_token(what);
    try {
      if (!t.empty() && t[0] == '-') throw std::invalid_argument(t);
      size_t used = 0;
      unsigned long long v = std::stoull(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      fail(ErrorKind::parse, context_ + ": expected unsigned integer for " +
                                 what + ", got '" + t + "'");
    }
  }

  double next_double(const std::string& what) {
    const std::string& t = next_token(what);
    try {
      size_t used = 0;
      double v = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      fail(ErrorKind::parse,
           context_ + ": expected number for " + what + ", got '" + t + "'");
    }
  }

  void expect_done() {
    if (!done())
      fail(ErrorKind::parse, context_ + ": trailing tokens starting at '" +
                                 toks_[pos_] + "'");
  }

 private:
  const std::string& next_token(const std::string& what) {
    if (done())
      fail(ErrorKind::parse, context_ + ": unexpected end of input, wanted " + what);
    return toks_[pos_++];
  }

  std::vector<std::string> toks_;
  std::string context_;
  size_t pos_ = 0;
};

// %.17g round-trips IEEE doubles exactly; used wherever instance files must
// regenerate bit-identical scenario streams after a write/read cycle.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace ixs
