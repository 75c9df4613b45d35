// a2gchan - UAV air-to-ground channel models and Manhattan-grid LoS simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef A2G_CSV_HPP
#define A2G_CSV_HPP

#include <string>
#include <vector>

namespace a2g::csv {

/// Shortest round-trip decimal form, locale-independent ('.' separator).
std::string format_double(double value);

/// Strict double parse of a whole field. Throws std::invalid_argument.
double parse_double(const std::string& field);

/// Splits simple comma-separated content (no quoting) into rows of fields.
/// Trailing CR is stripped; empty lines and lines starting with '#' skipped.
std::vector<std::vector<std::string>> parse(const std::string& content);

/// Joins fields with commas and a trailing LF. Fields must not contain commas.
std::string join_row(const std::vector<std::string>& fields);

} // namespace a2g::csv

#endif
