#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semnet/conceptnet.hpp"
#include "semnet/degree_stats.hpp"

namespace semnet {

struct PeakOptions {
  double threshold = 3.0;       // height / baseline prediction
  std::size_t min_run = 2;      // bins
  double min_count = 5.0;       // nodes per bin for a bin to count as evidence
  DegreeWindow baseline;        // bins used for the power-law baseline
  std::size_t refit_rounds = 5;
};

struct PeakBounds {
  std::size_t k_min = 0;
  std::size_t k_max = 0;
  std::size_t first_bin = 0;
  std::size_t last_bin = 0;
  double excess_mass = 0.0;     // run mass above the baseline
  LineFit baseline;             // log height = intercept + slope log k
};

/// Finds the strongest run of consecutive bins whose height is at least
/// `threshold` times a power-law baseline fitted over `baseline` (bins that
/// exceed the threshold are dropped from the fit and it is repeated). With a
/// density, bounds narrow to the degrees whose own count clears the same
/// threshold; otherwise they are the observed degree range of the run.
std::optional<PeakBounds> detect_peak(const BinnedDensity& binned, const PeakOptions& opts,
                                      const DegreeDensity* density = nullptr);

/// Grammatical-variation counts per language, loaded from a JSON document
/// of the form {"es": {"name": "Spanish", "m": 54}, ...}.
class GrammarTable {
 public:
  static GrammarTable load(const std::string& path);
  static GrammarTable parse(const std::string& json_text);

  /// Looks up an ISO code or a language name (case-insensitive).
  std::optional<std::size_t> expectation(const std::string& language) const;
  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::string code;
    std::string name;
    std::size_t m = 0;
  };
  std::vector<Entry> entries_;
};

/// Location of the data file shipped with the sources.
std::string default_grammar_table_path();

struct PosBreakdown {
  /// percent per tag (verb, noun, adjective, adverb) among tagged peak words
  std::array<double, 4> peak_percent{};
  std::size_t tagged_peak_words = 0;
  /// mean / std over peak words of their neighbors' tag percentages
  std::array<double, 4> neighbor_mean{};
  std::array<double, 4> neighbor_std{};
  std::size_t words_with_tagged_neighbors = 0;
  bool empty = true;  // no tagged peak word
};

PosBreakdown peak_pos_breakdown(const Graph& g, std::span<const NodeId> peak_nodes, const PosTable& pos);

struct PeakReport {
  std::optional<PeakBounds> bounds;
  std::optional<std::size_t> m_expected;
  bool matched = false;
  std::vector<NodeId> peak_nodes;
  double covered_by_formof = 0.0;
  PosBreakdown pos;
};

/// |m - nearest bound| within this many degrees still counts as a match.
inline constexpr std::size_t kPeakMatchTolerance = 2;

bool peak_matches(const PeakBounds& b, std::size_t m, std::size_t tolerance = kPeakMatchTolerance);

/// Nodes whose degree lies in [k_min, k_max].
std::vector<NodeId> nodes_in_degree_range(const Graph& g, std::size_t k_min, std::size_t k_max);

struct MergeComparison {
  BinnedDensity before;
  BinnedDensity after;
  std::optional<PeakBounds> peak_before;
  std::optional<PeakBounds> peak_after;
  std::size_t links_before = 0;
  std::size_t links_after = 0;
  std::size_t nodes_before = 0;
  std::size_t nodes_after = 0;
  /// 1 - (mass in the before-peak degree range after merging) / (mass before)
  double peak_mass_reduction = 0.0;
};

/// Default log-width for peak work; finer than the plotting default so a
/// peak a few degrees wide spans more than one bin.
inline constexpr double kInflectionLogWidth = 0.1;

MergeComparison merge_and_compare(const Graph& g, const MergeMap& merge, double log_width, const PeakOptions& opts);

/// Detection, grammar match, Form-Of coverage and POS breakdown in one go.
PeakReport analyze_peak(const Graph& g, const BinnedDensity& binned, const DegreeDensity& density,
                        const PeakOptions& opts, std::optional<std::size_t> m_expected, const MergeMap* merge,
                        const PosTable* pos);

}  // namespace semnet
