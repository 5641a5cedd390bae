#include "hertzinv/cluster.hpp"
#include "hertzinv/oracle.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hz = hertzinv;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 11;
    const std::string spec = argc > 2 ? argv[2] : "12,21";
    if (n < 0 || n > 14) {
        std::cerr << "usage: bench_oracle [n <= 14] [patterns]\n";
        return 2;
    }

    std::vector<hz::Permutation> pats;
    std::string token;
    for (char c : spec + ",") {
        if (c == ',') {
            if (!token.empty()) pats.push_back(hz::Permutation::parse(token));
            token.clear();
        } else {
            token += c;
        }
    }
    const hz::PatternSet set{pats};

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (no OpenMP)\n";
#endif
    std::cout << "patterns {" << set.label() << "}, n = " << n << ", involutions "
              << hz::involution_count(n).str() << "\n";

    auto t0 = std::chrono::steady_clock::now();
    const hz::Census serial = hz::statistics_census_serial(set, n);
    const double serial_s = seconds_since(t0);
    std::cout << "census serial:    " << serial_s << " s, " << serial.size() << " rows\n";

    t0 = std::chrono::steady_clock::now();
    const hz::Census parallel = hz::statistics_census(set, n);
    const double parallel_s = seconds_since(t0);
    std::cout << "census parallel:  " << parallel_s << " s";
    if (parallel_s > 0) std::cout << " (speedup " << serial_s / parallel_s << "x)";
    std::cout << "\n";
    if (serial != parallel) {
        std::cerr << "MISMATCH between serial and parallel census\n";
        return 1;
    }

    const int marked_n = std::min(n, 9);
    const std::vector<std::string> vars = hz::involution_vars(set);
    t0 = std::chrono::steady_clock::now();
    const hz::MultiSeries row_serial = hz::marked_row_formula_serial(set, vars, marked_n);
    const double row_serial_s = seconds_since(t0);
    std::cout << "marked row serial (n = " << marked_n << "):   " << row_serial_s << " s\n";

    t0 = std::chrono::steady_clock::now();
    const hz::MultiSeries row_parallel = hz::marked_row_formula(set, vars, marked_n);
    const double row_parallel_s = seconds_since(t0);
    std::cout << "marked row parallel (n = " << marked_n << "): " << row_parallel_s << " s";
    if (row_parallel_s > 0) std::cout << " (speedup " << row_serial_s / row_parallel_s << "x)";
    std::cout << "\n";
    if (row_serial != row_parallel) {
        std::cerr << "MISMATCH between serial and parallel marked rows\n";
        return 1;
    }

    std::cout << "serial and parallel results identical\n";
    return 0;
}
