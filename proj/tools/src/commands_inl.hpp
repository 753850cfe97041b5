// Copyright 2026 The ionscatter Authors.
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


#ifndef IONSCATTER_TOOLS_COMMANDS_INL_HPP
#define IONSCATTER_TOOLS_COMMANDS_INL_HPP

#include <ostream>

#include "ionscatter/errors.hpp"

namespace ionscatter::cli {

template <class F>
int guarded(F&& body, std::ostream& err) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "validation failed:\n";
    for (const auto& d : e.diagnostics()) err << "  " << d << "\n";
    return kValidation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const NoSolutionError& e) {
    err << "no solution: " << e.what() << "\n";
    return kNoSolution;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace ionscatter::cli

#endif
