#pragma once

// Character-level minimum edit distance alignment between a generated copy
// of a sentence and the original source. Unit costs, match cost 0,
// deterministic traceback preference match > substitute > delete > insert
// ("delete" drops a source character, "insert" is a generated character with
// no source counterpart). Decoders use the alignment to recover source
// offsets from imperfect model copies.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bioner/errors.hpp"

namespace bioner {

inline constexpr double kDefaultAlignmentMaxRatio = 0.5;

struct CharAlignment {
  std::size_t distance = 0;
  double ratio = 0.0;  // distance / max(1, |source|)
  // Per generated position: the aligned source offset. Inserted generated
  // characters carry the offset of the next aligned source character
  // (source length when none follows).
  std::vector<std::size_t> src_of;
  std::vector<bool> inserted;

  // Maps a generated-side span to source offsets, tightened to the aligned
  // characters it contains. nullopt when the span holds only insertions.
  std::optional<std::pair<std::size_t, std::size_t>> map_span(
      std::size_t begin, std::size_t end) const {
    std::optional<std::size_t> s, e;
    for (std::size_t i = begin; i < end && i < src_of.size(); ++i) {
      if (!inserted[i]) {
        if (!s) s = src_of[i];
        e = src_of[i] + 1;
      }
    }
    if (!s) return std::nullopt;
    return std::make_pair(*s, *e);
  }
};

// Exact quadratic DP. Throws AlignmentRejected only when the table would be
// absurdly large (the decoders length-guard before calling).
inline CharAlignment align_chars(const std::u32string& generated,
                                 const std::u32string& source) {
  const std::size_t m = generated.size();
  const std::size_t n = source.size();
  CharAlignment out;
  out.src_of.assign(m, n);
  out.inserted.assign(m, false);

  if (generated == source) {  // common case: the model copied faithfully
    for (std::size_t i = 0; i < m; ++i) out.src_of[i] = i;
    out.distance = 0;
    out.ratio = 0.0;
    return out;
  }

  constexpr std::size_t kMaxCells = 64u * 1024u * 1024u;
  if ((m + 1) * (n + 1) > kMaxCells) {
    throw AlignmentRejected("alignment table too large: " +
                            std::to_string(m) + " x " + std::to_string(n));
  }

  const std::size_t stride = n + 1;
  std::vector<std::uint32_t> dp((m + 1) * stride);
  for (std::size_t j = 0; j <= n; ++j) dp[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    dp[i * stride] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint32_t diag =
          dp[(i - 1) * stride + j - 1] + (generated[i - 1] == source[j - 1] ? 0 : 1);
      const std::uint32_t del = dp[i * stride + j - 1] + 1;
      const std::uint32_t ins = dp[(i - 1) * stride + j] + 1;
      dp[i * stride + j] = std::min(diag, std::min(del, ins));
    }
  }
  out.distance = dp[m * stride + n];
  out.ratio = static_cast<double>(out.distance) /
              static_cast<double>(n > 0 ? n : 1);

  // traceback with the fixed preference order
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    const std::uint32_t cur = dp[i * stride + j];
    if (i > 0 && j > 0 && generated[i - 1] == source[j - 1] &&
        cur == dp[(i - 1) * stride + j - 1]) {
      out.src_of[i - 1] = j - 1;
      --i;
      --j;
    } else if (i > 0 && j > 0 && cur == dp[(i - 1) * stride + j - 1] + 1) {
      out.src_of[i - 1] = j - 1;  // substitution still aligns the positions
      --i;
      --j;
    } else if (j > 0 && cur == dp[i * stride + j - 1] + 1) {
      --j;  // source character deleted
    } else {
      out.inserted[i - 1] = true;
      --i;
    }
  }
  // insertions point at the next aligned source character
  std::size_t next = n;
  for (std::size_t k = m; k-- > 0;) {
    if (out.inserted[k]) {
      out.src_of[k] = next;
    } else {
      next = out.src_of[k];
    }
  }
  return out;
}

// The decoder entry point: rejects hallucinated lines whose edit distance
// exceeds max_ratio of the source length. A cheap length pre-check avoids
// the DP when the sizes alone already force rejection.
inline CharAlignment align_to_source(
    const std::u32string& generated, const std::u32string& source,
    double max_ratio = kDefaultAlignmentMaxRatio) {
  const double base = static_cast<double>(source.empty() ? 1 : source.size());
  const std::size_t diff = generated.size() > source.size()
                               ? generated.size() - source.size()
                               : source.size() - generated.size();
  if (static_cast<double>(diff) > max_ratio * base) {
    throw AlignmentRejected("length difference alone exceeds ratio " +
                            std::to_string(max_ratio));
  }
  CharAlignment a = align_chars(generated, source);
  if (a.ratio > max_ratio) {
    throw AlignmentRejected("edit ratio " + std::to_string(a.ratio) +
                            " exceeds " + std::to_string(max_ratio));
  }
  return a;
}

}  // namespace bioner
