/// \file graded.hpp
/// Finitely supported dimension tables keyed by a single grading or a
/// bigrading; carriers for all homology outputs.

#pragma once

#include <map>
#include <string>
#include <utility>

namespace plathom {

/// map grading key -> dimension; absent key means 0.
struct GradedDims {
    std::map<int, int> d;

    void add(int key, int v) {
        if (v == 0) return;
        auto it = d.find(key);
        if (it == d.end())
            d[key] = v;
        else if ((it->second += v) == 0)
            d.erase(it);
    }
    int at(int key) const {
        auto it = d.find(key);
        return it == d.end() ? 0 : it->second;
    }
    int total() const {
        int t = 0;
        for (const auto& e : d) t += e.second;
        return t;
    }
    bool operator==(const GradedDims& o) const { return d == o.d; }

    GradedDims shifted(int s) const {
        GradedDims out;
        for (const auto& e : d) out.d[e.first + s] = e.second;
        return out;
    }
    /// Convolution: (a*b)[x+y] += a[x]*b[y].
    GradedDims convolved(const GradedDims& o) const {
        GradedDims out;
        for (const auto& a : d)
            for (const auto& b : o.d) out.add(a.first + b.first, a.second * b.second);
        return out;
    }
    std::string str() const;
};

struct BigradedDims {
    std::map<std::pair<int, int>, int> d;

    void add(std::pair<int, int> key, int v) {
        if (v == 0) return;
        auto it = d.find(key);
        if (it == d.end())
            d[key] = v;
        else if ((it->second += v) == 0)
            d.erase(it);
    }
    int at(std::pair<int, int> key) const {
        auto it = d.find(key);
        return it == d.end() ? 0 : it->second;
    }
    int total() const {
        int t = 0;
        for (const auto& e : d) t += e.second;
        return t;
    }
    bool operator==(const BigradedDims& o) const { return d == o.d; }

    /// Collapse (h, q) to delta = q - 2h (or any a*h + b*q).
    GradedDims collapse(int a, int b) const {
        GradedDims out;
        for (const auto& e : d) out.add(a * e.first.first + b * e.first.second, e.second);
        return out;
    }
    std::string str() const;
};

}  // namespace plathom
