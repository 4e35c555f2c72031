#include "symcensus/refinement.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace symcensus {

OrderedPartition::OrderedPartition(int n)
    : verts_(n), pos_(n), cbeg_(n, 0), clen_(n, 0), ncells_(n > 0 ? 1 : 0) {
  if (n < 0) throw std::invalid_argument("partition: negative degree");
  std::iota(verts_.begin(), verts_.end(), 0);
  std::iota(pos_.begin(), pos_.end(), 0);
  if (n > 0) clen_[0] = n;
}

OrderedPartition::OrderedPartition(int n, const std::vector<int>& colors)
    : verts_(n), pos_(n), cbeg_(n), clen_(n, 0) {
  if (static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("partition: one color per vertex required");
  std::iota(verts_.begin(), verts_.end(), 0);
  std::sort(verts_.begin(), verts_.end(), [&colors](int a, int b) {
    if (colors[a] != colors[b]) return colors[a] < colors[b];
    return a < b;
  });
  int i = 0;
  while (i < n) {
    int j = i;
    while (j < n && colors[verts_[j]] == colors[verts_[i]]) ++j;
    clen_[i] = j - i;
    for (int k = i; k < j; ++k) {
      cbeg_[k] = i;
      pos_[verts_[k]] = k;
    }
    ++ncells_;
    i = j;
  }
}

std::vector<std::pair<int, int>> OrderedPartition::cells() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(ncells_);
  for (int s = 0; s < degree(); s += clen_[s]) out.emplace_back(s, clen_[s]);
  return out;
}

int OrderedPartition::target_cell_start() const {
  int best = -1, best_len = std::numeric_limits<int>::max();
  for (int s = 0; s < degree(); s += clen_[s]) {
    if (clen_[s] > 1 && clen_[s] < best_len) {
      best = s;
      best_len = clen_[s];
    }
  }
  return best;
}

Permutation OrderedPartition::to_labeling() const {
  return Permutation(pos_);
}

int OrderedPartition::individualize(int v) {
  const int s = cbeg_[pos_[v]];
  const int len = clen_[s];
  if (len < 2)
    throw std::logic_error("individualize: cell is already a singleton");
  const int pv = pos_[v];
  const int u = verts_[s];
  std::swap(verts_[s], verts_[pv]);
  pos_[v] = s;
  pos_[u] = pv;
  clen_[s] = 1;
  clen_[s + 1] = len - 1;
  for (int i = s + 1; i < s + len; ++i) cbeg_[i] = s + 1;
  ++ncells_;
  return s;
}

Refiner::Refiner(const Graph& g)
    : g_(&g), cnt_(g.vertex_count(), 0), cell_touched_(g.vertex_count(), 0) {}

RefinementTrace Refiner::refine(OrderedPartition& p, std::vector<int> active) {
  const int n = p.degree();
  RefinementTrace trace;
  std::deque<int> queue;
  std::vector<char> in_queue(n, 0);
  if (active.empty())
    for (int s = 0; s < n; s += p.clen_[s]) active.push_back(s);
  for (int s : active) {
    if (s < 0 || s >= n || p.cbeg_[s] != s)
      throw std::invalid_argument("refine: active entry is not a cell start");
    if (!in_queue[s]) {
      in_queue[s] = 1;
      queue.push_back(s);
    }
  }

  while (!queue.empty() && !p.is_discrete()) {
    const int ws = queue.front();
    queue.pop_front();
    in_queue[ws] = 0;
    const int wlen = p.clen_[ws];

    // Count neighbors in the splitter W and collect the cells they live in.
    touched_order_.clear();
    for (int i = ws; i < ws + wlen; ++i) {
      for (int u : g_->neighbors(p.verts_[i])) {
        ++cnt_[u];
        const int cs = p.cbeg_[p.pos_[u]];
        if (!cell_touched_[cs]) {
          cell_touched_[cs] = 1;
          touched_order_.push_back(cs);
        }
      }
    }
    std::sort(touched_order_.begin(), touched_order_.end());

    for (const int cs : touched_order_) {
      cell_touched_[cs] = 0;
      const int len = p.clen_[cs];
      if (len == 1) continue;

      bool uniform = true;
      const int first_cnt = cnt_[p.verts_[cs]];
      for (int i = cs + 1; i < cs + len && uniform; ++i)
        uniform = (cnt_[p.verts_[i]] == first_cnt);
      if (uniform) continue;

      // Reorder the cell by count ascending, ties by current position, then
      // cut it at every count change.
      std::vector<std::pair<int, int>> items;
      items.reserve(len);
      for (int i = cs; i < cs + len; ++i)
        items.emplace_back(cnt_[p.verts_[i]], p.verts_[i]);
      std::sort(items.begin(), items.end(),
                [this, &p](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return p.pos_[a.second] < p.pos_[b.second];
                });
      for (int j = 0; j < len; ++j) {
        p.verts_[cs + j] = items[j].second;
        p.pos_[items[j].second] = cs + j;
      }
      std::vector<std::pair<int, int>> fragments;  // (start, count value)
      for (int j = 0; j < len; ++j)
        if (j == 0 || items[j].first != items[j - 1].first)
          fragments.emplace_back(cs + j, items[j].first);
      const int k = static_cast<int>(fragments.size());
      trace.push_back(static_cast<std::uint64_t>(cs));
      trace.push_back(static_cast<std::uint64_t>(k));
      int largest = 0;
      for (int f = 0; f < k; ++f) {
        const int fs = fragments[f].first;
        const int fend = (f + 1 < k) ? fragments[f + 1].first : cs + len;
        p.clen_[fs] = fend - fs;
        for (int i = fs; i < fend; ++i) p.cbeg_[i] = fs;
        if (p.clen_[fs] > p.clen_[fragments[largest].first]) largest = f;
        trace.push_back(static_cast<std::uint64_t>(fragments[f].second));
        trace.push_back(static_cast<std::uint64_t>(fend - fs));
      }
      p.ncells_ += k - 1;

      if (in_queue[cs]) {
        // Queued cell: every fragment goes on the queue; the first fragment
        // keeps the original queue slot at position cs.
        for (int f = 1; f < k; ++f) {
          const int fs = fragments[f].first;
          in_queue[fs] = 1;
          queue.push_back(fs);
        }
      } else {
        // Unqueued cell: all fragments except one largest.
        for (int f = 0; f < k; ++f) {
          if (f == largest) continue;
          const int fs = fragments[f].first;
          if (!in_queue[fs]) {
            in_queue[fs] = 1;
            queue.push_back(fs);
          }
        }
      }
    }

    // Reset the counters touched by this splitter. Splits only reorder
    // inside cell ranges, so W's old range still holds exactly W's members.
    for (int i = ws; i < ws + wlen; ++i)
      for (int u : g_->neighbors(p.verts_[i])) cnt_[u] = 0;
  }

  trace.push_back(std::numeric_limits<std::uint64_t>::max());
  trace.push_back(static_cast<std::uint64_t>(p.cell_count()));
  return trace;
}

}  // namespace symcensus
