// Copyright 2026 The outcol Authors
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

#include <string>
#include <vector>

namespace outcol::detail {

// Strong semicomplete digraphs on 3..5 vertices with minimum out-degree 2, no
// 2-out-colouring and no G1/G2 witness.
extern const std::vector<std::string> kExceptionForms = {
    "03ee00",
    "04ca79",
    "0506ab5800",
    "050a4fdb00",
    "05380dea00",
    "0586c9ba00",
    "058a457b00",
    "05b4e0e900",
};

// Semicomplete digraphs on 6 vertices with a 2-out-colouring but no balanced one.
extern const std::vector<std::string> kUnbalanceableForms = {
    "060a3598cd05",
    "060a93c0cf07",
    "060a93c0e703",
    "060a93c0e707",
    "060a93c0ef07",
    "06123354e607",
    "0662b84c8707",
    "0662b84cc707",
};

}  // namespace outcol::detail
