/*
 * Copyright 2026 The QCSA Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QCSA_CLI_H_
#define QCSA_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qcsa::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // internal error, failed check or trial
inline constexpr int kBadParams = 2;
inline constexpr int kBadFile = 3;

inline constexpr uint64_t kDefaultSeed = 20240917;
// Directory used for output files when --out is not given.
inline constexpr const char* kOutDirEnv = "QCSA_OUT_DIR";

// Runs one command line. args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qcsa::cli

#endif  // QCSA_CLI_H_
