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

#ifndef QFA_CLI_HPP
#define QFA_CLI_HPP

#include <iosfwd>

namespace qfa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInequivalent = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the `qfa` tool: validate, prob, equiv, gen, bound, bench.
/// Exit codes: 0 equivalent/valid/ok, 1 inequivalent, 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfa

#endif  // QFA_CLI_HPP
