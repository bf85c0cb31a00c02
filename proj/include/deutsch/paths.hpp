/*
   Copyright 2026 the deutsch-paths authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DEUTSCH_PATHS_HPP
#define DEUTSCH_PATHS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deutsch {

/// Thrown when an enumeration length exceeds the configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation defined only for closed paths sees an open one.
struct NotClosed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One lattice step: +1 (up) or -j with j >= 1 (down by j in a single step).
struct Step {
  int value = 1;

  constexpr bool is_up() const { return value == 1; }
  constexpr int drop() const { return value < 0 ? -value : 0; }

  friend constexpr bool operator==(Step, Step) = default;
};

/// A Deutsch path: the partial sums of the step values stay >= 0.
/// The empty path is valid and closed.
using Path = std::vector<Step>;

/// Aggregate statistics of one path, collected in a single scan.
struct PathStats {
  int length = 0;
  int end_level = 0;
  /// Maximal up-runs immediately followed by a down-step. A trailing up-run
  /// is not a mountain.
  int mountains = 0;
  /// Maximal up-runs of length exactly 1, a trailing one included.
  int single_up_runs = 0;
  bool ends_with_down = false;

  friend bool operator==(const PathStats&, const PathStats&) = default;
};

inline constexpr int kDefaultEnumerationCap = 14;

inline bool is_valid(const Path& p) {
  int level = 0;
  for (const Step s : p) {
    if (s.value != 1 && s.value >= 0) return false;
    level += s.value;
    if (level < 0) return false;
  }
  return true;
}

inline PathStats path_stats(const Path& p) {
  PathStats out;
  out.length = static_cast<int>(p.size());
  int level = 0;
  int up_run = 0;
  for (const Step s : p) {
    if (s.is_up()) {
      level += 1;
      up_run += 1;
    } else {
      if (up_run > 0) {
        out.mountains += 1;
        if (up_run == 1) out.single_up_runs += 1;
        up_run = 0;
      }
      level -= s.drop();
      if (level < 0) throw std::invalid_argument("path goes below the x-axis");
    }
  }
  if (up_run == 1) out.single_up_runs += 1;
  out.end_level = level;
  out.ends_with_down = !p.empty() && !p.back().is_up();
  return out;
}

/// True iff every maximal down-run that ends on the x-axis starts from an
/// odd level. Defined for closed paths only; the empty path qualifies.
inline bool stanley_ok(const Path& p) {
  int level = 0;
  for (const Step s : p) level += s.value;
  if (level != 0) throw NotClosed("stanley_ok: path does not end on the x-axis");

  level = 0;
  size_t i = 0;
  while (i < p.size()) {
    if (p[i].is_up()) {
      level += 1;
      ++i;
      continue;
    }
    const int start_level = level;
    while (i < p.size() && !p[i].is_up()) {
      level -= p[i].drop();
      ++i;
    }
    if (level == 0 && start_level % 2 == 0) return false;
  }
  return true;
}

/// True iff every down-step has size 1.
inline bool is_dyck(const Path& p) {
  for (const Step s : p) {
    if (!s.is_up() && s.drop() != 1) return false;
  }
  return true;
}

/// Visits every Deutsch path with exactly n steps, each exactly once.
/// Down-steps of different sizes are distinct steps: a single drop of 3 is a
/// different path from three drops of 1.
template <typename Visitor>
void enumerate_paths(int n, Visitor&& visit, int cap = kDefaultEnumerationCap) {
  if (n < 0 || n > cap) {
    throw CapExceeded("enumerate_paths: length " + std::to_string(n) +
                      " outside enumeration cap " + std::to_string(cap));
  }
  Path path;
  path.reserve(static_cast<size_t>(n));
  auto rec = [&](auto&& self, int remaining, int level) -> void {
    if (remaining == 0) {
      visit(std::as_const(path));
      return;
    }
    path.push_back(Step{+1});
    self(self, remaining - 1, level + 1);
    path.pop_back();
    for (int j = 1; j <= level; ++j) {
      path.push_back(Step{-j});
      self(self, remaining - 1, level - j);
      path.pop_back();
    }
  };
  rec(rec, n, 0);
}

using PathPredicate = std::function<bool(const PathStats&, const Path&)>;

/// Number of length-n paths passing the filter (all paths when empty).
inline long long count_paths(int n, const PathPredicate& keep = {},
                             int cap = kDefaultEnumerationCap) {
  long long count = 0;
  enumerate_paths(
      n,
      [&](const Path& p) {
        if (!keep || keep(path_stats(p), p)) ++count;
      },
      cap);
  return count;
}

/// Counts of length-n paths passing the filter, grouped by an integer key.
template <typename KeyFn>
std::map<int, long long> path_histogram(int n, KeyFn&& key, const PathPredicate& keep = {},
                                        int cap = kDefaultEnumerationCap) {
  std::map<int, long long> hist;
  enumerate_paths(
      n,
      [&](const Path& p) {
        const PathStats s = path_stats(p);
        if (!keep || keep(s, p)) hist[key(s, p)] += 1;
      },
      cap);
  return hist;
}

}  // namespace deutsch

#endif  // DEUTSCH_PATHS_HPP
