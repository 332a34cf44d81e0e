#include "cased/matching.h"

#include <algorithm>
#include <deque>
#include <limits>

namespace cased {

namespace {

// Maximum-weight matching via the primal-dual blossom method, dense matrix
// form, 1-based nodes; blossom ids occupy n+1 .. 2n.  Weights must be even
// (the caller doubles them) so dual adjustments stay integral.
class BlossomMatcher {
  public:
    explicit BlossomMatcher(int n)
        : n_(n), cap_(2 * n + 1), g_(cap_ * cap_), lab_(cap_), match_(cap_), slack_(cap_),
          st_(cap_), pa_(cap_), s_(cap_), vis_(cap_), flower_(cap_),
          flower_from_(static_cast<size_t>(cap_) * cap_) {
        for (int u = 1; u < cap_; ++u)
            for (int v = 1; v < cap_; ++v)
                at(u, v) = {u, v, 0};
    }

    void set_weight(int u, int v, long long w) {
        at(u, v).w = w;
        at(v, u).w = w;
    }

    // returns (total weight of matched edges, number of matched pairs)
    std::pair<long long, int> solve() {
        std::fill(s_.begin(), s_.end(), -1);
        std::fill(match_.begin(), match_.end(), 0);
        n_x_ = n_;
        for (int u = 0; u <= n_; ++u) {
            st_[u] = u;
            flower_[u].clear();
        }
        long long w_max = 0;
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) {
                ff(u, v) = (u == v ? u : 0);
                w_max = std::max(w_max, at(u, v).w);
            }
        for (int u = 1; u <= n_; ++u)
            lab_[u] = w_max;
        int n_matches = 0;
        while (run_phase())
            ++n_matches;
        long long total = 0;
        for (int u = 1; u <= n_; ++u)
            if (match_[u] && match_[u] < u)
                total += at(u, match_[u]).w;
        return {total, n_matches};
    }

    int matched_with(int u) const { return match_[u]; }

  private:
    struct Edge {
        int u, v;
        long long w;
    };

    Edge& at(int u, int v) { return g_[static_cast<size_t>(u) * cap_ + v]; }
    int& ff(int b, int x) { return flower_from_[static_cast<size_t>(b) * cap_ + x]; }

    long long e_delta(const Edge& e) { return lab_[e.u] + lab_[e.v] - at(e.u, e.v).w * 2; }

    void update_slack(int u, int x) {
        if (!slack_[x] || e_delta(at(u, x)) < e_delta(at(slack_[x], x)))
            slack_[x] = u;
    }

    void set_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u)
            if (at(u, x).w > 0 && st_[u] != x && s_[st_[u]] == 0)
                update_slack(u, x);
    }

    void q_push(int x) {
        if (x <= n_) {
            queue_.push_back(x);
        } else {
            for (int y : flower_[x])
                q_push(y);
        }
    }

    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_)
            for (int y : flower_[x])
                set_st(y, b);
    }

    int get_pr(int b, int xr) {
        int pr = static_cast<int>(std::find(flower_[b].begin(), flower_[b].end(), xr) -
                                  flower_[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower_[b].begin() + 1, flower_[b].end());
            return static_cast<int>(flower_[b].size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[u] = at(u, v).v;
        if (u <= n_)
            return;
        Edge e = at(u, v);
        int xr = ff(u, e.u);
        int pr = get_pr(u, xr);
        for (int i = 0; i < pr; ++i)
            set_match(flower_[u][i], flower_[u][i ^ 1]);
        set_match(xr, v);
        std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st_[match_[u]];
            set_match(u, v);
            if (!xnv)
                return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++timestamp_; u || v; std::swap(u, v)) {
            if (u == 0)
                continue;
            if (vis_[u] == timestamp_)
                return u;
            vis_[u] = timestamp_;
            u = st_[match_[u]];
            if (u)
                u = st_[pa_[u]];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b])
            ++b;
        if (b > n_x_)
            ++n_x_;
        lab_[b] = 0;
        s_[b] = 0;
        match_[b] = match_[lca];
        flower_[b].clear();
        flower_[b].push_back(lca);
        for (int x = u, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        for (int x = v, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) {
            at(b, x).w = 0;
            at(x, b).w = 0;
        }
        for (int x = 1; x <= n_; ++x)
            ff(b, x) = 0;
        for (int xs : flower_[b]) {
            for (int x = 1; x <= n_x_; ++x)
                if (at(b, x).w == 0 || e_delta(at(xs, x)) < e_delta(at(b, x))) {
                    at(b, x) = at(xs, x);
                    at(x, b) = at(x, xs);
                }
            for (int x = 1; x <= n_; ++x)
                if (ff(xs, x))
                    ff(b, x) = xs;
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        for (int y : flower_[b])
            set_st(y, y);
        int xr = ff(b, at(b, pa_[b]).u);
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = flower_[b][i];
            int xns = flower_[b][i + 1];
            pa_[xs] = at(xns, xs).u;
            s_[xs] = 1;
            s_[xns] = 0;
            slack_[xs] = 0;
            set_slack(xns);
            q_push(xns);
        }
        s_[xr] = 1;
        pa_[xr] = pa_[b];
        for (size_t i = pr + 1; i < flower_[b].size(); ++i) {
            int xs = flower_[b][i];
            s_[xs] = -1;
            set_slack(xs);
        }
        st_[b] = 0;
    }

    bool on_found_edge(const Edge& e) {
        int u = st_[e.u], v = st_[e.v];
        if (s_[v] == -1) {
            pa_[v] = e.u;
            s_[v] = 1;
            int nu = st_[match_[v]];
            slack_[v] = 0;
            slack_[nu] = 0;
            s_[nu] = 0;
            q_push(nu);
        } else if (s_[v] == 0) {
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

    bool run_phase() {
        std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
        queue_.clear();
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && !match_[x]) {
                pa_[x] = 0;
                s_[x] = 0;
                q_push(x);
            }
        if (queue_.empty())
            return false;
        for (;;) {
            while (!queue_.empty()) {
                int u = queue_.front();
                queue_.pop_front();
                if (s_[st_[u]] == 1)
                    continue;
                for (int v = 1; v <= n_; ++v)
                    if (at(u, v).w > 0 && st_[u] != st_[v]) {
                        if (e_delta(at(u, v)) == 0) {
                            if (on_found_edge(at(u, v)))
                                return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
            }
            long long d = std::numeric_limits<long long>::max();
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1)
                    d = std::min(d, lab_[b] / 2);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x]) {
                    if (s_[x] == -1)
                        d = std::min(d, e_delta(at(slack_[x], x)));
                    else if (s_[x] == 0)
                        d = std::min(d, e_delta(at(slack_[x], x)) / 2);
                }
            for (int u = 1; u <= n_; ++u) {
                if (s_[st_[u]] == 0) {
                    if (lab_[u] <= d)
                        return false;
                    lab_[u] -= d;
                } else if (s_[st_[u]] == 1) {
                    lab_[u] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b) {
                    if (s_[b] == 0)
                        lab_[b] += d * 2;
                    else if (s_[b] == 1)
                        lab_[b] -= d * 2;
                }
            queue_.clear();
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                    e_delta(at(slack_[x], x)) == 0)
                    if (on_found_edge(at(slack_[x], x)))
                        return true;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1 && lab_[b] == 0)
                    expand_blossom(b);
        }
    }

    int n_, n_x_ = 0, cap_;
    std::vector<Edge> g_;
    std::vector<long long> lab_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<std::vector<int>> flower_;
    std::vector<int> flower_from_;
    std::deque<int> queue_;
    int timestamp_ = 0;
};

} // namespace

PerfectMatching min_weight_perfect_matching(int n, const std::vector<MatchingEdge>& edges) {
    if (n % 2 != 0)
        throw Error("perfect matching requires an even node count");
    PerfectMatching out;
    out.partner.assign(n, -1);
    if (n == 0)
        return out;

    long long max_w = 0;
    for (const auto& e : edges) {
        if (e.weight < 0)
            throw Error("matching weights must be nonnegative");
        max_w = std::max(max_w, e.weight);
    }
    // Shift so that maximum weight favours cardinality first; the matcher
    // then maximizes K - w, i.e. minimizes w among perfect matchings.
    // Doubled to keep duals integral.
    const long long shift = max_w * n + 1;
    BlossomMatcher matcher(n);
    std::vector<long long> weight_of(static_cast<size_t>(n) * n, -1);
    for (const auto& e : edges) {
        if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw Error("matching edge endpoints out of range");
        auto& slot = weight_of[static_cast<size_t>(e.u) * n + e.v];
        if (slot < 0 || e.weight < slot) {
            slot = e.weight;
            weight_of[static_cast<size_t>(e.v) * n + e.u] = e.weight;
            matcher.set_weight(e.u + 1, e.v + 1, 2 * (shift - e.weight));
        }
    }
    auto [_, pairs] = matcher.solve();
    if (pairs * 2 != n)
        throw Error("matching instance admits no perfect matching");
    for (int u = 0; u < n; ++u) {
        int v = matcher.matched_with(u + 1) - 1;
        out.partner[u] = v;
        if (u < v)
            out.total_weight += weight_of[static_cast<size_t>(u) * n + v];
    }
    return out;
}

} // namespace cased
