#pragma once

// Row-by-row crochet programs for triangulated {3,k} disks.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hyperflower {

enum class Stitch { SlipStitch, Chain, HalfStitch, DoubleCrochet };

inline constexpr std::array kAllStitches{Stitch::SlipStitch, Stitch::Chain, Stitch::HalfStitch,
                                         Stitch::DoubleCrochet};

/// Machine name: slip_stitch, chain, half_stitch, double_crochet.
std::string_view to_string(Stitch s);
/// Chart abbreviation: sl, ch, hs, dc.
std::string_view abbreviation(Stitch s);

enum class StepKind {
  Rising,          ///< three chains that lift the hook to row height
  Cluster,         ///< three chains then a double crochet into a new anchor
  RepeatPrevious,  ///< the previous cluster again, into the same anchor
  RepeatGroup,     ///< a run of earlier steps again, one anchor further each time
  ClosingChains,
  Finish,          ///< half stitch closing the row
};

std::string_view to_string(StepKind kind);

struct Step {
  int number = 0;  ///< numbered continuously through the whole pattern
  StepKind kind = StepKind::Rising;
  std::vector<Stitch> stitches;  ///< one repetition
  std::string anchor;
  int repeat = 1;
  int group_first = 0;  ///< step range repeated by a RepeatGroup step
  int group_last = 0;

  bool operator==(const Step&) const = default;
};

struct Row {
  int index = 0;
  std::vector<Step> steps;
  std::string note;
  bool operator==(const Row&) const = default;
};

struct Pattern {
  int k = 0;
  std::vector<Row> rows;
  std::vector<std::string> notes;
  bool operator==(const Pattern&) const = default;
};

/// The published seven-triangle scheme, rows 1..4, transcribed step by step.
Pattern pattern_k7(int rows);

/// General scheme: row 1 closes k triangles around the centre with k - 1
/// chain/double-crochet clusters; every later row works k - 3 clusters into
/// each double crochet of the row before.
Pattern compile_pattern(int k, int rows);

struct StitchCounts {
  std::array<std::size_t, 4> by_kind{};  ///< indexed by Stitch
  std::size_t total = 0;

  std::size_t operator[](Stitch s) const { return by_kind[static_cast<std::size_t>(s)]; }
  bool operator==(const StitchCounts&) const = default;
};

struct PatternCounts {
  std::vector<StitchCounts> rows;
  StitchCounts total;
};

StitchCounts row_counts(const Row& row);
PatternCounts stitch_counts(const Pattern& p);

/// Yarn length: sum of stitch counts times per-stitch lengths. Every stitch
/// kind must be priced with a positive length.
double yarn_estimate(const Pattern& p, const std::map<Stitch, double>& per_stitch_length);

/// One line per step, "Row R, Step N: <instruction>. [<stitches>] xM", then notes.
std::string render_text(const Pattern& p);

}  // namespace hyperflower
