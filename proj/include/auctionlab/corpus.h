// Copyright 2026 The AuctionLab Authors
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

#ifndef AUCTIONLAB_CORPUS_H_
#define AUCTIONLAB_CORPUS_H_

#include <string>
#include <vector>

#include "auctionlab/scenario.h"

namespace auctionlab {

struct CheckLine {
  std::string what;
  std::string expected;
  std::string measured;
  bool ok = false;
};

struct ReproduceReport {
  std::string name;
  std::vector<CheckLine> checks;
  double seconds = 0;

  bool ok() const;
  void Add(std::string what, std::string expected, std::string measured, bool ok);
  std::string ToString() const;
};

std::vector<std::string> CorpusNames();

// $AUCTIONLAB_SCENARIO_DIR when set, else the source tree's scenarios/.
std::string DefaultScenarioDir();

// Loads <dir>/<name>.scn and runs its pipeline. Throws std::invalid_argument
// for an unknown name.
ReproduceReport Reproduce(const std::string& name,
                          const std::string& scenario_dir = DefaultScenarioDir());

// The pipelines, callable on scenarios built in code.
ReproduceReport ReproduceLower(const Scenario& s);
ReproduceReport ReproduceIntro(const Scenario& s);
ReproduceReport ReproduceStability(const Scenario& s);
ReproduceReport ReproduceNonUnique(const Scenario& s);
ReproduceReport ReproduceUnitDemandPoa2(const Scenario& s);

// Four bidders a-d, items A, B, C: a wants A (eps), b wants A or B (alpha),
// c wants B or C (alpha), d wants C (alpha - eps). Sequential order A, C, B
// plus the draft profile where b, c, d bid eps+ and a bids 0.
Scenario IntroScenario(const Rational& alpha, const Rational& eps);

}  // namespace auctionlab

#endif  // AUCTIONLAB_CORPUS_H_
