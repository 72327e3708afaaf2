// Copyright 2026 The qfa-equiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFA_IO_HPP
#define QFA_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfa/automaton.hpp"
#include "qfa/equivalence.hpp"

namespace qfa {

inline constexpr int kFormatVersion = 1;

/// Error while reading an automaton document. `location()` is a JSON
/// pointer to the offending value, or "byte N" for syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& what)
      : std::runtime_error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)),
        detail_(what) {}

  [[nodiscard]] const std::string& location() const { return location_; }
  [[nodiscard]] const std::string& detail() const { return detail_; }

 private:
  std::string location_;
  std::string detail_;
};

/// Reads a JSON automaton document and validates it.
KLetterQfa parse_qfa(std::string_view text);

/// Structural parse only; the result may violate the automaton invariants.
KLetterQfa parse_qfa_unvalidated(std::string_view text);

/// Deterministic JSON rendering (sorted keys, exact rationals).
std::string serialize_qfa(const KLetterQfa& a);

KLetterQfa load_qfa(const std::filesystem::path& path);
KLetterQfa load_qfa_unvalidated(const std::filesystem::path& path);
void save_qfa(const std::filesystem::path& path, const KLetterQfa& a);

enum class Method { kAlgebraic, kBruteForce };

struct EquivReport {
  Verdict verdict;
  Method method = Method::kAlgebraic;
  std::uint64_t bound_used = 0;
  DecisionStats stats;
  double wall_millis = 0.0;
};

std::string report_json(const EquivReport& report);
std::string report_text(const EquivReport& report);

}  // namespace qfa

#endif  // QFA_IO_HPP
