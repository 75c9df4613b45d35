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

#ifndef A2G_ERRORS_HPP
#define A2G_ERRORS_HPP

#include <stdexcept>

namespace a2g {

/// Non-convergence or other numerical failure (CLI exit code 3).
struct numerical_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

} // namespace a2g

#endif
