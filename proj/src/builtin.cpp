// speechfis/builtin.cpp
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

#include "speechfis/builtin.hpp"

#include <stdexcept>

#include "speechfis/fis_config.hpp"

namespace speechfis {

// Matches data/speech_accuracy.fis byte for byte, quirky spacing included.
const char* builtin_fis_text() {
  return R"fis([System]
Name='SpeechAccuracy'
Type='mamdani'
Version=2.0
NumInputs=3
NumOutputs=1
NumRules=5
AndMethod='min'
OrMethod='max'
ImpMethod='min'
AggMethod='max'
DefuzzMethod='centroid'

[Input1]
Name='Environment'
Range=[10 50]
NumMFs=3
MF1='VNoisy':'trimf',[-6 10 20]
MF2='Noisy':'trimf',[20 30 35]
MF3='Clean':'trimf',[35 50 66]

[Input2]
Name='WinSz'
Range=[240 270]
NumMFs=3
MF1='Small':'trimf',[225 240 250]
MF2='Medium':'trimf',[250 255 260]
MF3='Large':'trimf',[260 270 282]

[Input3]
Name='FrOver'
Range=[20 60]
NumMFs=3
MF1='Small':'trimf',[4 20 40]
MF2='Medium':'trimf',[40 50 55]
MF3='Large':'trimf',[50 60 76]

[Output1]
Name='Accuracy'

Range=[95 100]

NumMFs=3

MF1='Good': 'gaussmf', [0.8493 95]

MF2='Better': 'gaussmf', [0.8493 97.5]

MF3='Best': 'gaussmf', [0.8493 100]

[Rules]
3 0 0, 2 (0.5) : 1
3 0 2, 3 (0.75) : 1
3 2 2, 3 (1) : 1
0 0 2, 2 (0.5) : 1
0 2 0, 2 (0.5) : 1
)fis";
}

const FisDefinition& builtin_fis() {
  static const FisDefinition fis = [] {
    ParseResult result = parse_fis(builtin_fis_text());
    if (!result.ok()) {
      throw std::logic_error("bundled FIS text failed to parse");
    }
    return *result.fis;
  }();
  return fis;
}

}  // namespace speechfis
