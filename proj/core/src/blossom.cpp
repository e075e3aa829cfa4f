#include "blossom.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace divm::detail {
namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Primal-dual blossom solver over a dense matrix. Vertices are 1..n,
// blossom nodes take ids n+1..2n. st_ maps every node to its surface
// (outermost) node; S is the search label: 0 outer, 1 inner, -1 unreached.
// Cells (x, y) hold the real endpoints of the representative edge between
// nodes x and y; for a blossom row that is the minimum-slack edge into the
// blossom, which stays minimal under dual updates because all vertices
// inside a blossom shift uniformly.
class Blossom {
 public:
  Blossom(int n, const std::vector<std::vector<long long>>& weight) : n_(n), dim_(2 * n + 1) {
    wt_.assign(static_cast<size_t>(n_ + 1) * (n_ + 1), 0);
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v)
        if (u != v) wt(u, v) = 2 * weight[static_cast<size_t>(u - 1)][static_cast<size_t>(v - 1)];
    eu_.assign(static_cast<size_t>(dim_) * dim_, 0);
    ev_.assign(static_cast<size_t>(dim_) * dim_, 0);
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v) EU(u, v) = u, EV(u, v) = v;
    lab_.assign(static_cast<size_t>(dim_), 0);
    mate_.assign(static_cast<size_t>(dim_), 0);
    slack_.assign(static_cast<size_t>(dim_), 0);
    st_.assign(static_cast<size_t>(dim_), 0);
    pa_.assign(static_cast<size_t>(dim_), 0);
    s_.assign(static_cast<size_t>(dim_), -1);
    vis_.assign(static_cast<size_t>(dim_), 0);
    flower_.assign(static_cast<size_t>(dim_), {});
    flower_from_.assign(static_cast<size_t>(dim_) * (n_ + 1), 0);
    n_x_ = n_;
  }

  std::vector<int> solve() {
    for (int u = 1; u <= n_; ++u) {
      st_[static_cast<size_t>(u)] = u;
      flower_from(u, u) = u;
    }
    long long wmax = 0;
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v) wmax = std::max(wmax, wt(u, v));
    for (int u = 1; u <= n_; ++u) lab_[static_cast<size_t>(u)] = wmax;
    while (phase()) {
    }
    std::vector<int> mate(static_cast<size_t>(n_));
    for (int u = 1; u <= n_; ++u) {
      if (!mate_[static_cast<size_t>(u)]) throw std::logic_error("blossom: vertex left exposed");
      mate[static_cast<size_t>(u - 1)] = mate_[static_cast<size_t>(u)] - 1;
    }
    return mate;
  }

 private:
  long long& wt(int u, int v) { return wt_[static_cast<size_t>(u) * (n_ + 1) + v]; }
  int& EU(int x, int y) { return eu_[static_cast<size_t>(x) * dim_ + y]; }
  int& EV(int x, int y) { return ev_[static_cast<size_t>(x) * dim_ + y]; }
  int& flower_from(int b, int x) { return flower_from_[static_cast<size_t>(b) * (n_ + 1) + x]; }

  long long e_delta(int x, int y) {
    int u = EU(x, y), v = EV(x, y);
    return lab_[static_cast<size_t>(u)] + lab_[static_cast<size_t>(v)] - 2 * wt(u, v);
  }

  void update_slack(int u, int x) {
    if (!slack_[static_cast<size_t>(x)] || e_delta(u, x) < e_delta(slack_[static_cast<size_t>(x)], x))
      slack_[static_cast<size_t>(x)] = u;
  }

  void set_slack(int x) {
    slack_[static_cast<size_t>(x)] = 0;
    for (int u = 1; u <= n_; ++u)
      if (st_[static_cast<size_t>(u)] != x && s_[static_cast<size_t>(st_[static_cast<size_t>(u)])] == 0)
        update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n_) {
      q_.push_back(x);
    } else {
      for (int i : flower_[static_cast<size_t>(x)]) q_push(i);
    }
  }

  void set_st(int x, int b) {
    st_[static_cast<size_t>(x)] = b;
    if (x > n_)
      for (int i : flower_[static_cast<size_t>(x)]) set_st(i, b);
  }

  // Position of child xr on blossom b's cycle; the odd case reverses the
  // cycle (keeping the base) so the position becomes even and the
  // alternation below pairs matched edges correctly.
  int get_pr(int b, int xr) {
    auto& f = flower_[static_cast<size_t>(b)];
    int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
      std::reverse(f.begin() + 1, f.end());
      return static_cast<int>(f.size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    mate_[static_cast<size_t>(u)] = EV(u, v);
    if (u <= n_) return;
    int xr = flower_from(u, EU(u, v));
    int pr = get_pr(u, xr);
    auto& f = flower_[static_cast<size_t>(u)];
    for (int i = 0; i < pr; ++i) set_match(f[static_cast<size_t>(i)], f[static_cast<size_t>(i ^ 1)]);
    set_match(xr, v);
    std::rotate(f.begin(), f.begin() + pr, f.end());
  }

  void augment(int u, int v) {
    for (;;) {
      int xnv = st_[static_cast<size_t>(mate_[static_cast<size_t>(u)])];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[static_cast<size_t>(pa_[static_cast<size_t>(xnv)])]);
      u = st_[static_cast<size_t>(pa_[static_cast<size_t>(xnv)])];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++lca_stamp_; u || v; std::swap(u, v)) {
      if (!u) continue;
      if (vis_[static_cast<size_t>(u)] == lca_stamp_) return u;
      vis_[static_cast<size_t>(u)] = lca_stamp_;
      u = st_[static_cast<size_t>(mate_[static_cast<size_t>(u)])];
      if (u) u = st_[static_cast<size_t>(pa_[static_cast<size_t>(u)])];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[static_cast<size_t>(b)]) ++b;
    if (b > n_x_) ++n_x_;
    if (n_x_ >= dim_) throw std::logic_error("blossom: node budget exceeded");
    auto& f = flower_[static_cast<size_t>(b)];
    lab_[static_cast<size_t>(b)] = 0;
    s_[static_cast<size_t>(b)] = 0;
    mate_[static_cast<size_t>(b)] = mate_[static_cast<size_t>(lca)];
    f.clear();
    f.push_back(lca);
    for (int x = u, y; x != lca; x = st_[static_cast<size_t>(pa_[static_cast<size_t>(y)])]) {
      f.push_back(x);
      f.push_back(y = st_[static_cast<size_t>(mate_[static_cast<size_t>(x)])]);
      q_push(y);
    }
    std::reverse(f.begin() + 1, f.end());
    for (int x = v, y; x != lca; x = st_[static_cast<size_t>(pa_[static_cast<size_t>(y)])]) {
      f.push_back(x);
      f.push_back(y = st_[static_cast<size_t>(mate_[static_cast<size_t>(x)])]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) EU(b, x) = 0, EU(x, b) = 0;
    for (int x = 1; x <= n_; ++x) flower_from(b, x) = 0;
    for (int xs : f) {
      for (int x = 1; x <= n_x_; ++x)
        if (x != b && (EU(b, x) == 0 || e_delta(xs, x) < e_delta(b, x))) {
          EU(b, x) = EU(xs, x);
          EV(b, x) = EV(xs, x);
          EU(x, b) = EU(x, xs);
          EV(x, b) = EV(x, xs);
        }
      for (int x = 1; x <= n_; ++x)
        if (flower_from(xs, x)) flower_from(b, x) = xs;
    }
    slack_[static_cast<size_t>(b)] = 0;
  }

  void expand_blossom(int b) {
    auto& f = flower_[static_cast<size_t>(b)];
    for (int xs : f) set_st(xs, xs);
    int xr = flower_from(b, EU(b, pa_[static_cast<size_t>(b)]));
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      int xs = f[static_cast<size_t>(i)];
      int xns = f[static_cast<size_t>(i + 1)];
      pa_[static_cast<size_t>(xs)] = EU(xns, xs);
      s_[static_cast<size_t>(xs)] = 1;
      s_[static_cast<size_t>(xns)] = 0;
      slack_[static_cast<size_t>(xs)] = 0;
      set_slack(xns);
      q_push(xns);
    }
    s_[static_cast<size_t>(xr)] = 1;
    pa_[static_cast<size_t>(xr)] = pa_[static_cast<size_t>(b)];
    for (int i = pr + 1; i < static_cast<int>(f.size()); ++i) {
      int xs = f[static_cast<size_t>(i)];
      s_[static_cast<size_t>(xs)] = -1;
      set_slack(xs);
    }
    st_[static_cast<size_t>(b)] = 0;
    slack_[static_cast<size_t>(b)] = 0;
    f.clear();
  }

  // eu0/ev0 are the real endpoints of a tight edge.
  bool on_found_edge(int eu0, int ev0) {
    int u = st_[static_cast<size_t>(eu0)];
    int v = st_[static_cast<size_t>(ev0)];
    if (s_[static_cast<size_t>(v)] == -1) {
      pa_[static_cast<size_t>(v)] = eu0;
      s_[static_cast<size_t>(v)] = 1;
      int nu = st_[static_cast<size_t>(mate_[static_cast<size_t>(v)])];
      slack_[static_cast<size_t>(v)] = 0;
      slack_[static_cast<size_t>(nu)] = 0;
      s_[static_cast<size_t>(nu)] = 0;
      q_push(nu);
    } else if (s_[static_cast<size_t>(v)] == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  // One search phase: returns true after an augmentation, false when no
  // exposed surface node remains.
  bool phase() {
    std::fill(s_.begin(), s_.end(), -1);
    std::fill(slack_.begin(), slack_.end(), 0);
    q_.clear();
    for (int x = 1; x <= n_x_; ++x)
      if (st_[static_cast<size_t>(x)] == x && !mate_[static_cast<size_t>(x)]) {
        pa_[static_cast<size_t>(x)] = 0;
        s_[static_cast<size_t>(x)] = 0;
        q_push(x);
      }
    if (q_.empty()) return false;
    const long long round_limit = 64ll * dim_ * dim_ + 4096;
    for (long long round = 0;; ++round) {
      if (round > round_limit) throw std::logic_error("blossom: phase failed to converge");
      while (!q_.empty()) {
        int u = q_.front();
        q_.pop_front();
        if (s_[static_cast<size_t>(st_[static_cast<size_t>(u)])] == 1) continue;
        for (int v = 1; v <= n_; ++v)
          if (v != u && st_[static_cast<size_t>(u)] != st_[static_cast<size_t>(v)]) {
            if (e_delta(u, v) == 0) {
              if (on_found_edge(u, v)) return true;
            } else {
              update_slack(u, st_[static_cast<size_t>(v)]);
            }
          }
      }
      long long d = kInf;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[static_cast<size_t>(b)] == b && s_[static_cast<size_t>(b)] == 1)
          d = std::min(d, lab_[static_cast<size_t>(b)] / 2);
      for (int x = 1; x <= n_x_; ++x) {
        int sx = slack_[static_cast<size_t>(x)];
        if (st_[static_cast<size_t>(x)] == x && sx && st_[static_cast<size_t>(sx)] != x) {
          if (s_[static_cast<size_t>(x)] == -1) d = std::min(d, e_delta(sx, x));
          else if (s_[static_cast<size_t>(x)] == 0) d = std::min(d, e_delta(sx, x) / 2);
        }
      }
      if (d >= kInf) throw std::logic_error("blossom: dual update unbounded");
      for (int u = 1; u <= n_; ++u) {
        int lbl = s_[static_cast<size_t>(st_[static_cast<size_t>(u)])];
        if (lbl == 0) lab_[static_cast<size_t>(u)] -= d;
        else if (lbl == 1) lab_[static_cast<size_t>(u)] += d;
      }
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[static_cast<size_t>(b)] == b) {
          if (s_[static_cast<size_t>(b)] == 0) lab_[static_cast<size_t>(b)] += 2 * d;
          else if (s_[static_cast<size_t>(b)] == 1) lab_[static_cast<size_t>(b)] -= 2 * d;
        }
      q_.clear();
      for (int x = 1; x <= n_x_; ++x) {
        int sx = slack_[static_cast<size_t>(x)];
        if (st_[static_cast<size_t>(x)] == x && sx && st_[static_cast<size_t>(sx)] != x &&
            e_delta(sx, x) == 0)
          if (on_found_edge(EU(sx, x), EV(sx, x))) return true;
      }
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[static_cast<size_t>(b)] == b && s_[static_cast<size_t>(b)] == 1 &&
            lab_[static_cast<size_t>(b)] == 0)
          expand_blossom(b);
    }
  }

  int n_;
  int dim_;
  int n_x_ = 0;
  int lca_stamp_ = 0;
  std::vector<long long> wt_;
  std::vector<int> eu_, ev_;
  std::vector<long long> lab_;
  std::vector<int> mate_, slack_, st_, pa_, s_, vis_;
  std::vector<std::vector<int>> flower_;
  std::vector<int> flower_from_;
  std::deque<int> q_;
};

}  // namespace

std::vector<int> max_weight_perfect_matching(int n,
                                             const std::vector<std::vector<long long>>& weight) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("vertex count must be even");
  if (n == 0) return {};
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (weight[static_cast<size_t>(u)][static_cast<size_t>(v)] < 0)
        throw std::invalid_argument("weights must be nonnegative");
  return Blossom(n, weight).solve();
}

}  // namespace divm::detail
