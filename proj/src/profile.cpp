#include "manakov/profile.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "manakov/errors.hpp"
#include "manakov/io_util.hpp"

namespace manakov {

CRow3 InitialProfile::eval(double x) const {
    switch (kind) {
        case ProfileKind::Sech: {
            const double u = (x - center) / width;
            const double s = 1.0 / std::cosh(u);
            return {amplitudes[0] * s, amplitudes[1] * s, amplitudes[2] * s};
        }
        case ProfileKind::Gaussian: {
            const double u = (x - center) / width;
            const double s = std::exp(-0.5 * u * u);
            return {amplitudes[0] * s, amplitudes[1] * s, amplitudes[2] * s};
        }
        case ProfileKind::Sampled: {
            if (samples.empty() || x < samples.front().x || x > samples.back().x) return {};
            auto it = std::lower_bound(samples.begin(), samples.end(), x,
                                       [](const SampleRow& r, double v) { return r.x < v; });
            if (it == samples.begin()) return {it->q1, it->q2, it->q3};
            const SampleRow& hi = *it;
            const SampleRow& lo = *(it - 1);
            const double w = (x - lo.x) / (hi.x - lo.x);
            return {lo.q1 + w * (hi.q1 - lo.q1), lo.q2 + w * (hi.q2 - lo.q2),
                    lo.q3 + w * (hi.q3 - lo.q3)};
        }
    }
    return {};
}

void InitialProfile::validate() const {
    if (!(width > 0) || !std::isfinite(width) || !std::isfinite(center))
        throw InvalidProfileError("profile: width/center invalid");
    if (!(support_cutoff > 0) || !std::isfinite(support_cutoff))
        throw InvalidProfileError("profile: support_cutoff must be positive");
    for (const auto& c : amplitudes)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InvalidProfileError("profile: non-finite amplitude");
    if (kind == ProfileKind::Sampled) {
        if (samples.size() < 2) throw InvalidProfileError("profile: too few samples");
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const SampleRow& r = samples[i];
            if (!std::isfinite(r.x) || !std::isfinite(r.q1.real()) ||
                !std::isfinite(r.q1.imag()) || !std::isfinite(r.q2.real()) ||
                !std::isfinite(r.q2.imag()) || !std::isfinite(r.q3.real()) ||
                !std::isfinite(r.q3.imag()))
                throw InvalidProfileError("profile: non-finite sample");
            if (i > 0 && !(samples[i - 1].x < r.x))
                throw InvalidProfileError("profile: sample abscissae not strictly increasing");
        }
    }
    // (1+|x|)-weighted L1 mass on [-L, L] must be finite
    const double L = support_cutoff;
    const int n = 2001;
    double acc = 0;
    for (int i = 0; i < n; ++i) {
        const double x = -L + 2.0 * L * i / (n - 1);
        const CRow3 q = eval(x);
        acc += (1.0 + std::abs(x)) *
               (std::abs(q[0]) + std::abs(q[1]) + std::abs(q[2]));
    }
    if (!std::isfinite(acc)) throw InvalidProfileError("profile: weighted L1 mass not finite");
}

double InitialProfile::tail_bound() const {
    const double L = support_cutoff;
    double amp = 0;
    for (const auto& c : amplitudes) amp += std::abs(c);
    switch (kind) {
        case ProfileKind::Sech: {
            // int_A^inf sech = 2 atan(e^{-A})
            const double right = 2.0 * std::atan(std::exp(-(L - center) / width));
            const double left = 2.0 * std::atan(std::exp(-(L + center) / width));
            return amp * width * (right + left);
        }
        case ProfileKind::Gaussian: {
            const double s = width * std::sqrt(kPi / 2.0);
            const double right = std::erfc((L - center) / (std::sqrt(2.0) * width));
            const double left = std::erfc((L + center) / (std::sqrt(2.0) * width));
            return amp * s * (right + left);
        }
        case ProfileKind::Sampled: {
            double acc = 0;
            for (std::size_t i = 1; i < samples.size(); ++i) {
                const double x0 = samples[i - 1].x, x1 = samples[i].x;
                if (x1 <= -L || x0 >= L) {
                    auto mag = [](const SampleRow& r) {
                        return std::abs(r.q1) + std::abs(r.q2) + std::abs(r.q3);
                    };
                    acc += 0.5 * (mag(samples[i - 1]) + mag(samples[i])) * (x1 - x0);
                }
            }
            return acc;
        }
    }
    return 0;
}

bool InitialProfile::is_zero() const {
    if (kind == ProfileKind::Sampled) {
        for (const auto& r : samples)
            if (std::abs(r.q1) + std::abs(r.q2) + std::abs(r.q3) != 0.0) return false;
        return true;
    }
    return std::abs(amplitudes[0]) + std::abs(amplitudes[1]) + std::abs(amplitudes[2]) == 0.0;
}

InitialProfile profile_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("profile csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw InvalidInputError("profile csv: empty file");
    {
        std::string h = line;
        h.erase(std::remove_if(h.begin(), h.end(),
                               [](char c) { return c == ' ' || c == '\r'; }),
                h.end());
        if (h != "x,q1_re,q1_im,q2_re,q2_im,q3_re,q3_im")
            throw InvalidInputError("profile csv: bad header '" + line + "'");
    }
    InitialProfile p;
    p.kind = ProfileKind::Sampled;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        std::array<double, 7> f{};
        std::size_t pos = 0;
        for (int col = 0; col < 7; ++col) {
            std::size_t next = line.find(',', pos);
            std::string tok = line.substr(pos, next == std::string::npos
                                                   ? std::string::npos
                                                   : next - pos);
            try {
                std::size_t used = 0;
                f[col] = std::stod(tok, &used);
                while (used < tok.size() &&
                       (tok[used] == ' ' || tok[used] == '\r'))
                    ++used;
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                std::ostringstream msg;
                msg << "profile csv: parse failure at line " << line_no << ", column "
                    << (col + 1);
                throw InvalidInputError(msg.str());
            }
            if (col < 6) {
                if (next == std::string::npos)
                    throw InvalidInputError("profile csv: short row at line " +
                                            std::to_string(line_no));
                pos = next + 1;
            }
        }
        p.samples.push_back({f[0], Complex(f[1], f[2]), Complex(f[3], f[4]),
                             Complex(f[5], f[6])});
    }
    if (!p.samples.empty())
        p.support_cutoff =
            std::max(std::abs(p.samples.front().x), std::abs(p.samples.back().x));
    p.validate();
    return p;
}

std::string kind_name(ProfileKind k) {
    switch (k) {
        case ProfileKind::Sech: return "sech";
        case ProfileKind::Gaussian: return "gaussian";
        case ProfileKind::Sampled: return "sampled";
    }
    return "?";
}

ProfileKind kind_from_name(const std::string& s) {
    if (s == "sech") return ProfileKind::Sech;
    if (s == "gaussian") return ProfileKind::Gaussian;
    if (s == "sampled") return ProfileKind::Sampled;
    throw InvalidInputError("unknown profile kind '" + s + "'");
}

std::string profile_fingerprint(const InitialProfile& p) {
    std::string canon = kind_name(p.kind);
    auto push = [&canon](double v) {
        canon += '|';
        canon += format_double(v);
    };
    for (const auto& c : p.amplitudes) {
        push(c.real());
        push(c.imag());
    }
    push(p.width);
    push(p.center);
    push(p.support_cutoff);
    for (const auto& r : p.samples) {
        push(r.x);
        push(r.q1.real());
        push(r.q1.imag());
        push(r.q2.real());
        push(r.q2.imag());
        push(r.q3.real());
        push(r.q3.imag());
    }
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : canon) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

}  // namespace manakov
