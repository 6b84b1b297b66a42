// Times the OpenMP kernels against their serial reference implementations:
// cycle detection on a lifted system, the per-edge claim audits, and the
// exhaustive extremal search.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "linhg/construct.hpp"
#include "linhg/cycles.hpp"
#include "linhg/diagnostics.hpp"
#include "linhg/search.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    {
        auto h = linhg::construct_c5free(5);
        linhg::BergeSearchResult rs, rp;
        double ts = time_ms([&] { rs = linhg::serial::find_berge_cycle(h, 7); });
        double tp = time_ms([&] { rp = linhg::find_berge_cycle(h, 7); });
        if ((rs.status == linhg::SearchStatus::found) != (rp.status == linhg::SearchStatus::found))
            std::printf("MISMATCH in berge detection\n");
        report("berge C7 on c5free(5)", ts, tp);
    }

    {
        auto h = linhg::construct_c5free(4);
        linhg::ClaimOptions opts;
        linhg::ClaimReport rs, rp;
        double ts = time_ms(
            [&] { rs = linhg::serial::check_claim(h, linhg::ClaimId::PLINK_BOUND, opts); });
        double tp = time_ms([&] { rp = linhg::check_claim(h, linhg::ClaimId::PLINK_BOUND, opts); });
        if (rs.slack != rp.slack || rs.witness != rp.witness)
            std::printf("MISMATCH in claim audit\n");
        report("PLINK_BOUND on c5free(4)", ts, tp);
    }

    {
        auto fam = linhg::FamilySpec::berge_up_to(4);
        linhg::ExtremalResult rs, rp;
        double ts = time_ms([&] { rs = linhg::serial::exact_extremal(7, fam); });
        double tp = time_ms([&] { rp = linhg::exact_extremal(7, fam); });
        if (rs.max_edges != rp.max_edges || !(rs.witness == rp.witness))
            std::printf("MISMATCH in extremal search\n");
        report("extremal n=7 no-C2/C4", ts, tp);
    }

    return 0;
}
