// Copyright 2026 The Judicious Authors
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


// Runs every reproduction check once and prints one line per criterion.
// Exit 0 iff all criteria pass within their wall-time budgets.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "judicious/judicious.hpp"

namespace {

// Wall-time budgets in seconds. Checks without an entry have no budget
// beyond the suite total.
const std::map<int, double> kBudget{
    {1, 1.0},    // 924 balanced partitions
    {3, 75.0},   // three blow-ups at < 5 s each plus the 24-vertex cross-check at < 60 s
    {11, 30.0},  // full certificate catalog
};
constexpr double kSuiteBudget = 600.0;

}  // namespace

int main(int argc, char** argv) {
  judicious::ReproductionOptions o;
  if (argc > 1) o.workers = std::atoi(argv[1]);
  if (o.workers < 1) o.workers = 1;
  double total = 0;
  int failed = 0;
  for (const auto& r : judicious::run_reproduction(o)) {
    total += r.seconds;
    bool on_time = true;
    if (auto it = kBudget.find(r.number); it != kBudget.end()) on_time = r.seconds <= it->second;
    bool ok = r.passed && on_time;
    failed += ok ? 0 : 1;
    std::printf("criterion %2d %-4s %-20s %7.2fs  %s%s\n", r.number, ok ? "PASS" : "FAIL", r.key.c_str(), r.seconds,
                r.detail.c_str(), on_time ? "" : " (over wall-time budget)");
  }
  bool suite_on_time = total <= kSuiteBudget;
  std::printf("suite %s in %.1fs; %d criteria failed\n", suite_on_time ? "finished" : "OVER BUDGET", total, failed);
  return failed == 0 && suite_on_time ? 0 : 1;
}
