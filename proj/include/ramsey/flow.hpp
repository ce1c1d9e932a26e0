#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace ramsey {

// Dinic max flow on a small directed network. Used for pendant-set
// assignment: spine vertices get capacity n to the source side, candidate
// pendants capacity 1 to the sink.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

    int add_edge(int u, int v, long long cap) {
        int id = int(to_.size());
        to_.push_back(v);
        cap_.push_back(cap);
        next_.push_back(head_[u]);
        head_[u] = id;
        to_.push_back(u);
        cap_.push_back(0);
        next_.push_back(head_[v]);
        head_[v] = id + 1;
        return id;
    }

    long long solve(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            it_ = head_;
            while (long long pushed = dfs(s, t, kInf)) flow += pushed;
        }
        return flow;
    }

    // Flow sent over edge id (forward direction).
    long long flow_on(int id) const { return cap_[id ^ 1]; }

private:
    static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e >= 0; e = next_[e]) {
                if (cap_[e] > 0 && level_[to_[e]] < 0) {
                    level_[to_[e]] = level_[u] + 1;
                    q.push(to_[e]);
                }
            }
        }
        return level_[t] >= 0;
    }

    long long dfs(int u, int t, long long limit) {
        if (u == t || limit == 0) return limit;
        for (int& e = it_[u]; e >= 0; e = next_[e]) {
            int v = to_[e];
            if (cap_[e] > 0 && level_[v] == level_[u] + 1) {
                long long pushed = dfs(v, t, std::min(limit, cap_[e]));
                if (pushed > 0) {
                    cap_[e] -= pushed;
                    cap_[e ^ 1] += pushed;
                    return pushed;
                }
            }
        }
        level_[u] = -1;
        return 0;
    }

    std::vector<int> head_, to_, next_, level_, it_;
    std::vector<long long> cap_;
};

}  // namespace ramsey
