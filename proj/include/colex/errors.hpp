// Copyright 2026 The colex-entropy Authors
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

#ifndef COLEX_ERRORS_HPP
#define COLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace colex {

// Every library failure derives from error so callers can catch one type.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : error {
    using error::error;
};
struct geometry_error : error {
    using error::error;
};
struct usage_error : error {
    using error::error;
};
// Input is valid but outside the regime a method handles exactly.
struct scope_error : error {
    using error::error;
};
struct kind_error : error {
    using error::error;
};
struct resource_error : error {
    using error::error;
};
struct construction_error : error {
    using error::error;
};

}  // namespace colex

#endif
