// Copyright 2026 The ghzident Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghzident::cli {

/// One named verification with an optional human-readable detail string.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The claims the toolkit is built to reproduce, evaluated end to end:
/// the truth-table eigenvalues, the impossibility results, the explicit
/// contextual and identity-based explanations, the symmetrization suite,
/// the cross-representation overlap and the interference dip.
std::vector<Check> paper_checks();

/// The symmetrization invariant suite on the three-boson state.
std::vector<Check> symmetrization_checks();

/// Runs one subcommand: ghz-table, symm-check, enumerate, hom or
/// verify-paper. Results go to `out` (or the path given with --out),
/// diagnostics to `err`. Returns 0 on success, 1 when a verification
/// fails, 2 on usage errors.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace ghzident::cli
