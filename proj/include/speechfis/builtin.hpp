// speechfis/builtin.hpp
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

#ifndef SPEECHFIS_BUILTIN_HPP_
#define SPEECHFIS_BUILTIN_HPP_

#include "speechfis/fuzzy.hpp"

namespace speechfis {

/// The bundled SpeechAccuracy system in `.fis` text form: three inputs
/// (Environment SNR in dB, Hamming window size, frame overlap %), one
/// Accuracy output on [95,100], five weighted rules.
const char* builtin_fis_text();

/// Parsed form of builtin_fis_text(), constructed once.
const FisDefinition& builtin_fis();

}  // namespace speechfis

#endif  // SPEECHFIS_BUILTIN_HPP_
