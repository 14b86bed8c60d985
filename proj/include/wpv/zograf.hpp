// Zograf's closed recursions for the cusped volumes in genus 0 and 1, kept
// independent of the volume recursion so that each checks the other.
//
//   V_{0,n}(0) = (2 pi^2)^(n-3) / (n-3)! * v0(n)
//   V_{1,n}(0) = (2 pi^2)^n / n! * v1(n)
#pragma once

#include <map>
#include <string>
#include <vector>

#include "wpv/exactalg.hpp"
#include "wpv/recursion.hpp"

namespace wpv {

struct ZografTable {
    std::map<int, Rational> v0;
    std::map<int, Rational> v1;
};

Rational zograf_v0(int n);
Rational zograf_v1(int n);

/// Memoized values computed so far.
ZografTable zograf_table();

/// The cusped volume predicted by the recursions, as a pi^2-monomial.
GradedPoly zograf_volume(int g, int n);

struct CrosscheckReport {
    struct Row {
        int g;
        int n;
        GradedPoly engine;
        GradedPoly zograf;
        bool agree() const { return engine == zograf; }
    };
    std::vector<Row> rows;

    std::size_t checked() const { return rows.size(); }
    bool ok() const;
};

/// Genus 0 for 3 <= n <= max_n0 and genus 1 for 1 <= n <= max_n1.
CrosscheckReport crosscheck(int max_n0, int max_n1, RecursionCache& cache);

}  // namespace wpv
