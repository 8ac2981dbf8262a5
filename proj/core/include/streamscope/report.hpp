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

#ifndef STREAMSCOPE_REPORT_HPP_
#define STREAMSCOPE_REPORT_HPP_

#include <cstdint>
#include <string>

#include "streamscope/estimators.hpp"

namespace streamscope {

// JSON documents with a fixed key order. Identical inputs give identical
// bytes. Disc types are hex-encoded.
std::string report_json(const EstimateReport& report, std::uint32_t n);
std::string report_json(const MstReport& report, std::uint32_t n);
std::string report_json(const DiscReport& report, std::uint32_t n);
std::string report_json(const DiscReport& discs, const MisEstimate& mis,
                        std::uint32_t n);

}  // namespace streamscope

#endif  // STREAMSCOPE_REPORT_HPP_
