/*
   Copyright 2026 The weylkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WEYLKIT_SPEC_IO_HPP
#define WEYLKIT_SPEC_IO_HPP

#include <string>
#include <string_view>

#include "weylkit/endo.hpp"

namespace weylkit {

// {"format": 1, "n": 1, "char": 0, "images": {"x1": "x1", "d1": "d1 + (1/2)*x1^2"}}
// "format" may be omitted on input; any other value is rejected. Throws
// InvalidSpec for schema problems and the parser's errors for bad images.
EndoSpec endo_from_json(std::string_view text);
std::string endo_to_json(const EndoSpec& e, int indent = 2);

}  // namespace weylkit

#endif
