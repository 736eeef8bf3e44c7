#include "manakov/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "manakov/errors.hpp"

namespace manakov {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// One cached FFTW plan pair per transform size. Plans are created with
// FFTW_ESTIMATE (no runtime measurement, so repeated runs pick identical
// plans) and FFTW_UNALIGNED (execute on any caller buffer).
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

PlanPair& plan_for(std::size_t n) {
    static std::map<std::size_t, PlanPair> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Complex> scratch(n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    PlanPair pp;
    pp.fwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_FORWARD,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
    pp.bwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_BACKWARD,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!pp.fwd || !pp.bwd) throw NumericalError("fft: plan creation failed");
    return cache.emplace(n, pp).first->second;
}

}  // namespace

void fft_inplace(std::vector<Complex>& v, bool inverse) {
    const std::size_t n = v.size();
    if (!is_pow2(n)) throw InvalidInputError("fft: length must be a power of two");
    PlanPair& pp = plan_for(n);
    auto* p = reinterpret_cast<fftw_complex*>(v.data());
    fftw_execute_dft(inverse ? pp.bwd : pp.fwd, p, p);
    if (inverse) {
        const double s = 1.0 / static_cast<double>(n);
        for (auto& c : v) c *= s;
    }
}

std::vector<Complex> fft(const std::vector<Complex>& v) {
    std::vector<Complex> out = v;
    fft_inplace(out, false);
    return out;
}

std::vector<Complex> ifft(const std::vector<Complex>& v) {
    std::vector<Complex> out = v;
    fft_inplace(out, true);
    return out;
}

}  // namespace manakov
