#pragma once

#include <filesystem>
#include <optional>

#include "trslab/problem.hpp"

namespace trs {

enum class ProblemFormat { MatrixMarket, DiagJson };

/// Dense symmetric matrix from a Matrix Market file (coordinate or array,
/// real, symmetric or general-with-symmetry-check).
DenseSym load_matrix_market(const std::filesystem::path& path);

/// Problem from {"diag": [...], "g": [...], "delta": r}.
TrsProblem load_diag_json(const std::filesystem::path& path);

/// Writes a diagonal problem back out; numbers round-trip bit-exactly.
void save_diag_json(const TrsProblem& problem, const std::filesystem::path& path);

/// Whitespace-separated vector of numbers, one or more per line.
Vector load_vector_text(const std::filesystem::path& path);

/// Unified loader. Matrix Market files carry only the operator, so the
/// gradient file and radius must be supplied alongside; diag-json is
/// self-contained and ignores both extras.
TrsProblem load_problem(const std::filesystem::path& path, ProblemFormat format,
                        const std::optional<std::filesystem::path>& g_path = std::nullopt,
                        std::optional<double> delta = std::nullopt);

}  // namespace trs
