// Copyright 2026 The streamscope Authors
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

#ifndef STREAMSCOPE_SUITE_HPP_
#define STREAMSCOPE_SUITE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace streamscope::suite {

enum class Scale { kQuick, kFull };

struct Options {
  Scale scale = Scale::kQuick;
  std::uint64_t seed = 2026;
  unsigned jobs = 1;
};

struct CheckInfo {
  std::string_view name;
  std::string_view summary;
  bool invariant;        // part of the default `verify` run
  double time_limit_s;   // full scale; 0 means none
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

std::span<const CheckInfo> checks();
// Throws InvalidArgument for an unknown name.
const CheckInfo& find_check(std::string_view name);
CheckResult run_check(std::string_view name, const Options& options);

}  // namespace streamscope::suite

#endif  // STREAMSCOPE_SUITE_HPP_
