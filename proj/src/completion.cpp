#include "fraisse/detail/completion.hpp"

#include <algorithm>

namespace fraisse::detail {

namespace {

struct Stage {
  std::vector<int> points;  // sorted point set settled after this stage
  std::vector<std::pair<std::size_t, Tuple>> mixed;
};

template <class F>
void for_each_tuple_over(const std::vector<int>& pts, int k, F&& f) {
  const int n = static_cast<int>(pts.size());
  if (n == 0) return;
  std::vector<int> idx(k, 0);
  Tuple t(k);
  while (true) {
    for (int p = 0; p < k; ++p) t[p] = pts[idx[p]];
    f(t);
    int p = k - 1;
    while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
    if (p < 0) return;
  }
}

Structure build_on(const CompletionProblem& pr, const std::vector<int>& pts,
                   const std::vector<std::vector<Tuple>>& chosen) {
  std::vector<int> pos(pr.size, -1);
  for (std::size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = static_cast<int>(i);
  Structure::Builder b(pr.signature, static_cast<int>(pts.size()));
  Tuple t;
  auto add_inside = [&](std::size_t r, const Tuple& s) {
    t.resize(s.size());
    for (std::size_t p = 0; p < s.size(); ++p) {
      t[p] = pos[s[p]];
      if (t[p] < 0) return;
    }
    b.add(r, t);
  };
  for (std::size_t r = 0; r < pr.forced.size(); ++r) {
    for (const auto& s : pr.forced[r]) add_inside(r, s);
    for (const auto& s : chosen[r]) add_inside(r, s);
  }
  return std::move(b).build();
}

}  // namespace

bool complete(const CompletionProblem& pr, const std::function<bool(const Structure&)>& accept,
              bool prune, const std::function<bool(const Structure&)>& visit) {
  const auto& sig = *pr.signature;
  std::vector<std::vector<Tuple>> chosen(sig.size());

  std::vector<int> all(pr.size);
  for (int i = 0; i < pr.size; ++i) all[i] = i;

  if (pr.left_only.empty() || pr.right_only.empty()) {
    Structure d = build_on(pr, all, chosen);
    if (accept(d)) return visit(d);
    return true;
  }

  std::vector<char> is_left(pr.size, 0), is_right(pr.size, 0);
  for (int v : pr.left_only) is_left[v] = 1;
  for (int v : pr.right_only) is_right[v] = 1;
  std::vector<int> common;
  for (int v = 0; v < pr.size; ++v)
    if (!is_left[v] && !is_right[v]) common.push_back(v);

  std::vector<Stage> stages;
  for (std::size_t j = 0; j < pr.right_only.size(); ++j) {
    for (std::size_t k = 0; k < pr.left_only.size(); ++k) {
      Stage st;
      st.points = common;
      st.points.insert(st.points.end(), pr.left_only.begin(), pr.left_only.begin() + k + 1);
      st.points.insert(st.points.end(), pr.right_only.begin(), pr.right_only.begin() + j + 1);
      std::sort(st.points.begin(), st.points.end());
      const int cj = pr.right_only[j];
      const int bk = pr.left_only[k];
      for (std::size_t r = 0; r < sig.size(); ++r) {
        for_each_tuple_over(st.points, sig.arity(r), [&](const Tuple& t) {
          bool has_c = std::find(t.begin(), t.end(), cj) != t.end();
          bool has_b = std::find(t.begin(), t.end(), bk) != t.end();
          if (has_c && has_b) st.mixed.emplace_back(r, t);
        });
      }
      stages.push_back(std::move(st));
    }
  }

  bool stopped = false;
  std::function<void(std::size_t)> go = [&](std::size_t s) {
    if (stopped) return;
    const Stage& st = stages[s];
    const bool last = s + 1 == stages.size();
    const std::size_t bits = st.mixed.size();
    const unsigned long long limit = 1ull << bits;
    for (unsigned long long mask = 0; mask < limit && !stopped; ++mask) {
      std::vector<std::size_t> pushed;
      for (std::size_t b = 0; b < bits; ++b) {
        if (mask >> b & 1ull) {
          chosen[st.mixed[b].first].push_back(st.mixed[b].second);
          pushed.push_back(st.mixed[b].first);
        }
      }
      if (last) {
        Structure d = build_on(pr, all, chosen);
        if (accept(d) && !visit(d)) stopped = true;
      } else if (!prune || accept(build_on(pr, st.points, chosen))) {
        go(s + 1);
      }
      for (auto it = pushed.rbegin(); it != pushed.rend(); ++it) chosen[*it].pop_back();
    }
  };
  go(0);
  return !stopped;
}

}  // namespace fraisse::detail
