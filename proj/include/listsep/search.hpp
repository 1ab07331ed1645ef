#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "listsep/setsys.hpp"

namespace listsep {

struct SearchOptions {
  /// Largest K_m the branch-and-bound may be asked to explore.
  int max_vertices = 5;
  /// Keep only branches whose completed layers are lexicographically maximal
  /// under vertex permutations.
  bool symmetry_reduction = true;
  /// Optional cap on explored nodes per call; exceeding it throws BudgetExceeded.
  std::optional<std::uint64_t> node_limit;
  /// Optional wall-clock cap per call.
  std::optional<std::chrono::milliseconds> time_limit;
};

/// A c-separating a-uniform PIVector on K_n whose full amplitude is below nb,
/// or nullopt when none exists.
std::optional<PIVector> find_counterexample(int n, int a, int b, int c, const SearchOptions& options = {});

struct SepQuery {
  int n = 2;
  int a = 1;
  int b = 1;
};

enum class CertificateKind { Exhaustive, ClosedForm, AmplitudeBound };
std::string to_string(CertificateKind kind);

struct SepResult {
  int value = 0;
  /// Present iff value < a: a-uniform, (value+1)-separating, violates the
  /// amplitude condition.
  std::optional<PIVector> counterexample;
  CertificateKind certificate = CertificateKind::Exhaustive;
  /// Vertex count of the smallest-c violating sub-configuration found.
  std::optional<int> witness_vertices;
  /// Closed-form value for this query when one is known.
  std::optional<int> closed_form;
};

/// Separation number of K_n: the largest c for which every c-separating
/// a-list assignment admits a b-coloring.
SepResult sep(const SepQuery& q, const SearchOptions& options = {}, std::optional<int> max_m = std::nullopt);

/// Upper bound on sep restricted to symmetric assignments on exactly n vertices.
int sep_symmetric(const SepQuery& q);

/// Known closed forms (K_2, K_3, the low and high ranges); nullopt outside them.
std::optional<int> sep_closed_form(int n, int a, int b);

struct ScanRow {
  int n = 0;
  int a = 0;
  int b = 0;
  int p = 0;
  int sep = 0;
  int conjectured = 0;
  int epsilon = 0;
  bool flagged = false;  // epsilon outside {-1, 0}
  std::optional<int> k4_refined;
};

/// Tabulates exact sep against the ceil((2pa - p(p+1)b)/(n-1)) conjecture for
/// every (a, b, p) with 2 <= p <= n-2 and pb <= a < (p+1)b. Rows are ordered
/// by (b, a); `jobs` workers split the rows.
std::vector<ScanRow> conjecture_scan(int n, int a_max, int b_max, const SearchOptions& options = {}, int jobs = 1);

std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace listsep
