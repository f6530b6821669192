/**************************************************************************
 * cli.hpp
 *
 * Copyright 2026 The tgrs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgrs/tgrs.hpp"

namespace tgrs::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* tool_name = "tgrs";
inline constexpr const char* tool_version = "1.0.0";

enum ExitCode : int { Ok = 0, Mismatch = 1, InputError = 2, BudgetExceeded = 3 };

/// Bad input document; `path` names the offending key, e.g. "alpha[3]".
class ParamsError : public Error {
public:
    ParamsError(std::string path, const std::string& reason)
        : Error(path.empty() ? reason : path + ": " + reason), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/**
 * Params document keys: q, modulus (optional; low degree first), n, k, ell,
 * alpha, v, eta. n and ell are optional but must agree with alpha and eta
 * when given; v defaults to all ones. Elements are integers in [0, q) for
 * prime fields and coefficient arrays (low degree first) otherwise.
 */
TgrsParams parse_params(const json& doc);
TgrsParams load_params(const std::string& path);
json params_to_json(const TgrsParams& p);

json element_to_json(const Field& f, Elem a);
Elem element_from_json(const Field& f, const json& j, const std::string& path);
Field field_from_json(const json& doc);

/// {"rows": r, "cols": c, "data": [row-major entries]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j, const std::string& path = "matrix");

/// Report metadata block shared by every command.
json metadata(const std::string& command, std::uint64_t seed);

json build_report(const TgrsParams& p);
/// Fills `exit_code` with Ok, Mismatch (NMDS verdicts disagree) or
/// BudgetExceeded.
json classify_report(const TgrsParams& p, Budget budget, int& exit_code);
json schur_report(const TgrsParams& p);

/// One built-in reproduction. Empty optionals are not checked.
struct ReferenceFixture {
    std::string name;
    std::uint32_t q = 0;
    std::size_t k = 0;
    std::vector<std::int64_t> alpha;
    std::vector<std::int64_t> v;
    std::vector<std::int64_t> eta;
    std::optional<std::int64_t> mu;  // alpha must be the roots of x^n - mu
    std::optional<std::vector<std::int64_t>> u;
    std::optional<std::vector<std::vector<std::int64_t>>> G;
    std::optional<std::size_t> d;
    std::optional<std::size_t> min_d_dual;
    std::optional<std::string> mds_class;
    std::optional<bool> nmds_criterion;
    std::optional<bool> self_orthogonal;
    std::optional<bool> projective;
    std::optional<std::int64_t> lambda;  // lambda u = v^2
};

std::vector<ReferenceFixture> default_reference_fixtures();

/// Prints one PASS/FAIL line per assertion; returns Ok iff all pass.
int run_reference_examples(const std::vector<ReferenceFixture>& fixtures, std::ostream& out, json* report = nullptr);

enum class SearchMode { SelfOrthogonal, Nmds, NonGrs };

struct SearchOptions {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t ell = 0;
    SearchMode mode = SearchMode::Nmds;
    std::uint64_t limit = 0;  // 0: no limit
    std::uint64_t seed = 0;
    std::uint64_t start_index = 1;  // lexicographic eta index, 1-based
    std::optional<std::int64_t> mu;
    std::optional<TgrsParams> base;  // alpha and v for nmds / non_grs
    Budget budget;
};

/**
 * Enumerates eta over [0,q)^{ell+1} minus zero in lexicographic order
 * (eta_0 most significant; eta's index is its base-q value). A nonzero seed
 * rotates the starting point cyclically.
 */
json run_search(const SearchOptions& opts, int& exit_code);
/// CSV rendering of a search report: one line per hit.
std::string search_csv(const json& report);

/// Entry point behind the `tgrs` executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tgrs::cli
