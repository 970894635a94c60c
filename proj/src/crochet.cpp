#include "hyperflower/crochet.hpp"

#include <string>

#include "hyperflower/error.hpp"

namespace hyperflower {
namespace {

constexpr std::string_view kSlipKnotNote = "Crochet begins with a slip knot.";
constexpr std::string_view kColorNote = "Yarn may be changed for another color when rows change.";

const std::vector<Stitch> kThreeChains{Stitch::Chain, Stitch::Chain, Stitch::Chain};
const std::vector<Stitch> kCluster{Stitch::Chain, Stitch::Chain, Stitch::Chain,
                                   Stitch::DoubleCrochet};

std::vector<Stitch> repeated(const std::vector<Stitch>& unit, int times) {
  std::vector<Stitch> out;
  for (int i = 0; i < times; ++i) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

std::size_t double_crochets(const Row& row) { return row_counts(row)[Stitch::DoubleCrochet]; }

std::string number_word(int n) {
  static constexpr std::array<std::string_view, 21> words{
      "zero",    "one",     "two",       "three",    "four",     "five",    "six",
      "seven",   "eight",   "nine",      "ten",      "eleven",   "twelve",  "thirteen",
      "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen", "twenty"};
  if (n >= 0 && n < static_cast<int>(words.size())) return std::string(words[static_cast<std::size_t>(n)]);
  return std::to_string(n);
}

std::string instruction(const Step& s, int row) {
  switch (s.kind) {
    case StepKind::Rising: return "Crochet three chain stitches for rising";
    case StepKind::Cluster:
      return row == 1 ? "Crochet three chain stitches, then double crochet stitch in the first chain"
                      : "Three chain stitches, double crochet stitch into the first double crochet "
                        "from the previous row";
    case StepKind::RepeatPrevious:
      return row == 1 ? "Repeat previous step " + number_word(s.repeat) + " more times"
                      : "Repeat the previous step " + number_word(s.repeat) +
                            " more times into the same double crochet";
    case StepKind::RepeatGroup:
      return "Repeat steps " + std::to_string(s.group_first) + "-" + std::to_string(s.group_last) +
             " " + number_word(s.repeat) +
             " more times, moving to the next double crochet of the previous row each time";
    case StepKind::ClosingChains: return "Crochet three chains";
    case StepKind::Finish: return "Finish the row with the half basic stitch";
  }
  return {};
}

// Row 1: rising chains, k - 1 clusters into the first chain, closing chains, half stitch.
Row first_row(int k, int& step) {
  Row row{1, {}, {}};
  row.steps.push_back({step++, StepKind::Rising, kThreeChains, "start", 1});
  row.steps.push_back({step++, StepKind::Cluster, kCluster, "first chain", 1});
  row.steps.push_back({step++, StepKind::RepeatPrevious, kCluster, "first chain", k - 2});
  row.steps.push_back({step++, StepKind::ClosingChains, kThreeChains, "", 1});
  row.steps.push_back({step++, StepKind::Finish, {Stitch::HalfStitch}, "", 1});
  return row;
}

// Later rows: clusters_per_anchor clusters into each of `anchors` double crochets.
Row later_row(int index, int clusters_per_anchor, std::size_t anchors, int& step) {
  Row row{index, {}, std::string(kColorNote)};
  row.steps.push_back({step++, StepKind::Rising, kThreeChains, "start", 1});
  const int cluster_step = step;
  row.steps.push_back(
      {step++, StepKind::Cluster, kCluster, "first double crochet of previous row", 1});
  int group_last = cluster_step;
  if (clusters_per_anchor > 1) {
    group_last = step;
    row.steps.push_back({step++, StepKind::RepeatPrevious, kCluster, "same double crochet",
                         clusters_per_anchor - 1});
  }
  if (anchors > 1) {
    row.steps.push_back({step++, StepKind::RepeatGroup, repeated(kCluster, clusters_per_anchor),
                         "next double crochet of previous row", static_cast<int>(anchors - 1),
                         cluster_step, group_last});
  }
  row.steps.push_back({step++, StepKind::ClosingChains, kThreeChains, "", 1});
  row.steps.push_back({step++, StepKind::Finish, {Stitch::HalfStitch}, "", 1});
  return row;
}

}  // namespace

std::string_view to_string(Stitch s) {
  switch (s) {
    case Stitch::SlipStitch: return "slip_stitch";
    case Stitch::Chain: return "chain";
    case Stitch::HalfStitch: return "half_stitch";
    case Stitch::DoubleCrochet: return "double_crochet";
  }
  return "unknown";
}

std::string_view abbreviation(Stitch s) {
  switch (s) {
    case Stitch::SlipStitch: return "sl";
    case Stitch::Chain: return "ch";
    case Stitch::HalfStitch: return "hs";
    case Stitch::DoubleCrochet: return "dc";
  }
  return "?";
}

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Rising: return "rising";
    case StepKind::Cluster: return "cluster";
    case StepKind::RepeatPrevious: return "repeat_previous";
    case StepKind::RepeatGroup: return "repeat_group";
    case StepKind::ClosingChains: return "closing_chains";
    case StepKind::Finish: return "finish";
  }
  return "unknown";
}

Pattern pattern_k7(int rows) {
  if (rows < 1 || rows > 4) {
    throw DomainError("pattern_k7: rows must be in 1..4 (use compile_pattern for more)");
  }
  Pattern p{7, {}, {std::string(kSlipKnotNote)}};
  const std::string no_anchor;

  // Row 1, steps 1-5.
  Row row1{1, {}, {}};
  row1.steps.push_back({1, StepKind::Rising, kThreeChains, "start", 1});
  row1.steps.push_back({2, StepKind::Cluster, kCluster, "first chain", 1});
  row1.steps.push_back({3, StepKind::RepeatPrevious, kCluster, "first chain", 5});
  row1.steps.push_back({4, StepKind::ClosingChains, kThreeChains, no_anchor, 1});
  row1.steps.push_back({5, StepKind::Finish, {Stitch::HalfStitch}, no_anchor, 1});
  p.rows.push_back(row1);

  // Row 2, steps 6-11; rows 3 and 4 repeat it over the new anchors.
  int step = 6;
  for (int r = 2; r <= rows; ++r) {
    const std::size_t anchors = double_crochets(p.rows.back());
    Row row{r, {}, std::string(kColorNote)};
    const int first = step;
    row.steps.push_back({step++, StepKind::Rising, kThreeChains, "start", 1});
    row.steps.push_back(
        {step++, StepKind::Cluster, kCluster, "first double crochet of previous row", 1});
    row.steps.push_back({step++, StepKind::RepeatPrevious, kCluster, "same double crochet", 3});
    row.steps.push_back({step++, StepKind::RepeatGroup,
                         {Stitch::Chain, Stitch::Chain, Stitch::Chain, Stitch::DoubleCrochet,
                          Stitch::Chain, Stitch::Chain, Stitch::Chain, Stitch::DoubleCrochet,
                          Stitch::Chain, Stitch::Chain, Stitch::Chain, Stitch::DoubleCrochet,
                          Stitch::Chain, Stitch::Chain, Stitch::Chain, Stitch::DoubleCrochet},
                         "next double crochet of previous row", static_cast<int>(anchors) - 1,
                         first + 1, first + 2});
    row.steps.push_back({step++, StepKind::ClosingChains, kThreeChains, no_anchor, 1});
    row.steps.push_back({step++, StepKind::Finish, {Stitch::HalfStitch}, no_anchor, 1});
    p.rows.push_back(row);
  }
  return p;
}

Pattern compile_pattern(int k, int rows) {
  if (k < 7) throw DomainError("compile_pattern: k must be >= 7, got " + std::to_string(k));
  if (rows < 1) throw DomainError("compile_pattern: rows must be >= 1");
  Pattern p{k, {}, {std::string(kSlipKnotNote)}};
  int step = 1;
  p.rows.push_back(first_row(k, step));
  for (int r = 2; r <= rows; ++r) {
    p.rows.push_back(later_row(r, k - 3, double_crochets(p.rows.back()), step));
  }
  return p;
}

StitchCounts row_counts(const Row& row) {
  StitchCounts c;
  for (const auto& s : row.steps) {
    for (const auto st : s.stitches) {
      c.by_kind[static_cast<std::size_t>(st)] += static_cast<std::size_t>(s.repeat);
    }
    c.total += s.stitches.size() * static_cast<std::size_t>(s.repeat);
  }
  return c;
}

PatternCounts stitch_counts(const Pattern& p) {
  PatternCounts out;
  for (const auto& row : p.rows) {
    const auto c = row_counts(row);
    for (std::size_t i = 0; i < c.by_kind.size(); ++i) out.total.by_kind[i] += c.by_kind[i];
    out.total.total += c.total;
    out.rows.push_back(c);
  }
  return out;
}

double yarn_estimate(const Pattern& p, const std::map<Stitch, double>& per_stitch_length) {
  double length = 0.0;
  const auto counts = stitch_counts(p).total;
  for (const auto s : kAllStitches) {
    const auto it = per_stitch_length.find(s);
    if (it == per_stitch_length.end()) {
      throw DomainError("yarn_estimate: no length given for " + std::string(to_string(s)));
    }
    if (!(it->second > 0.0)) {
      throw DomainError("yarn_estimate: length for " + std::string(to_string(s)) + " must be > 0");
    }
    length += static_cast<double>(counts[s]) * it->second;
  }
  return length;
}

std::string render_text(const Pattern& p) {
  std::string out;
  for (const auto& row : p.rows) {
    for (const auto& s : row.steps) {
      out += "Row " + std::to_string(row.index) + ", Step " + std::to_string(s.number) + ": " +
             instruction(s, row.index) + ". [";
      for (std::size_t i = 0; i < s.stitches.size(); ++i) {
        if (i > 0) out += ' ';
        out += abbreviation(s.stitches[i]);
      }
      out += "] x" + std::to_string(s.repeat) + "\n";
    }
  }
  for (const auto& note : p.notes) out += "Note: " + note + "\n";
  for (const auto& row : p.rows) {
    if (!row.note.empty()) out += "Note (row " + std::to_string(row.index) + "): " + row.note + "\n";
  }
  return out;
}

}  // namespace hyperflower
