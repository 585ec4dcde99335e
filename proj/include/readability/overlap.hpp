// Copyright 2026 The Readability Authors
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

#ifndef READABILITY_OVERLAP_HPP
#define READABILITY_OVERLAP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "readability/graph.hpp"

namespace readability {

// Thrown when a labeling fails a precondition (coverage, equal lengths,
// injectivity), as opposed to being a well-formed but wrong labeling.
class LabelingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Smallest k in 1..min(|a|,|b|) with suffix(a,k) == prefix(b,k), else 0.
// Full-length overlaps count. Throws std::invalid_argument on empty input.
std::size_t min_overlap(const String& a, const String& b);

// Same as min_overlap but returns 0 when either string is empty.
std::size_t min_overlap_or_zero(const String& a, const String& b);

// Throws LabelingError on empty or duplicate strings.
Digraph overlap_digraph(const std::vector<String>& strings);

// Throws LabelingError when the strings do not all share one length.
BipartiteGraph overlap_bipartite(const std::vector<String>& s_strings,
                                 const std::vector<String>& t_strings);

enum class Mismatch { kNone, kMissing, kSpurious };

struct Verdict {
  bool ok = true;
  Mismatch kind = Mismatch::kNone;
  Vertex from = 0;  // tail, or S index
  Vertex to = 0;    // head, or T index

  std::string describe() const;
};

Verdict verify_labeling(const Digraph& g, const DigraphLabeling& l);
Verdict verify_labeling(const BipartiteGraph& g, const BipartiteLabeling& l);

}  // namespace readability

#endif  // READABILITY_OVERLAP_HPP
