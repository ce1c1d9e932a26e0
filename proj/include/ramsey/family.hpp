#pragma once

#include <string>
#include <string_view>

#include "ramsey/errors.hpp"

namespace ramsey {

// Target graph families. Parameter meaning by kind:
//   CompleteBipartite  K_{s,t}   a = s, b = t
//   Book               B_b^(a)   a = spine size k, b = page count n
//   Starburst          S_b^(a)   a = clique size k, b = pendants per vertex n
//   Clique             K_a
//   Path               P_a       a = number of vertices
enum class FamilyKind { CompleteBipartite, Book, Starburst, Clique, Path };

struct FamilyParams {
    FamilyKind kind = FamilyKind::Clique;
    int a = 0;
    int b = 0;

    static FamilyParams complete_bipartite(int s, int t) {
        return {FamilyKind::CompleteBipartite, s, t};
    }
    static FamilyParams book(int k, int n) { return {FamilyKind::Book, k, n}; }
    static FamilyParams starburst(int k, int n) {
        return {FamilyKind::Starburst, k, n};
    }
    static FamilyParams clique(int k) { return {FamilyKind::Clique, k, 0}; }
    static FamilyParams path(int n) { return {FamilyKind::Path, n, 0}; }

    int vertex_count() const {
        switch (kind) {
            case FamilyKind::CompleteBipartite: return a + b;
            case FamilyKind::Book: return a + b;
            case FamilyKind::Starburst: return a + a * b;
            case FamilyKind::Clique: return a;
            case FamilyKind::Path: return a;
        }
        return 0;
    }

    long long edge_count() const {
        long long k = a, n = b;
        switch (kind) {
            case FamilyKind::CompleteBipartite: return k * n;
            case FamilyKind::Book: return k * (k - 1) / 2 + k * n;
            case FamilyKind::Starburst: return k * (k - 1) / 2 + k * n;
            case FamilyKind::Clique: return k * (k - 1) / 2;
            case FamilyKind::Path: return k > 0 ? k - 1 : 0;
        }
        return 0;
    }

    std::string str() const;

    // Accepts "kst:s,t", "book:k,n", "starburst:k,n", "clique:k", "path:n".
    static FamilyParams parse(std::string_view text);

    bool operator==(const FamilyParams&) const = default;
};

}  // namespace ramsey
