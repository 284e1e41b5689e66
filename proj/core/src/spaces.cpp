#include "symprod/spaces.hpp"

#include <stdexcept>

namespace symprod {

GradedSpace::GradedSpace(std::vector<long long> betti) : betti_(std::move(betti)) {
    if (betti_.empty()) {
        throw std::invalid_argument("GradedSpace: Betti list must be non-empty");
    }
    for (long long b : betti_) {
        if (b < 0) throw std::invalid_argument("GradedSpace: Betti numbers must be non-negative");
    }
}

long long GradedSpace::betti(int d) const {
    if (d < 0 || d > top_degree()) return 0;
    return betti_[static_cast<size_t>(d)];
}

long long GradedSpace::total_dim() const {
    long long s = 0;
    for (long long b : betti_) s += b;
    return s;
}

long long euler_char(const GradedSpace& space) {
    long long chi = 0;
    int sign = 1;
    for (long long b : space.betti_list()) {
        chi += sign * b;
        sign = -sign;
    }
    return chi;
}

namespace {

struct Resolver {
    GradedSpace operator()(const Sphere& s) const {
        if (s.dim < 1) throw std::invalid_argument("Sphere: dimension must be positive");
        std::vector<long long> b(static_cast<size_t>(s.dim) + 1, 0);
        b.front() = 1;
        b.back() += 1;  // S^1 has betti (1,1)
        return GradedSpace(b);
    }
    GradedSpace operator()(const ClosedSurface& s) const {
        if (s.genus < 0) throw std::invalid_argument("ClosedSurface: genus must be non-negative");
        return GradedSpace({1, 2LL * s.genus, 1});
    }
    GradedSpace operator()(const PuncturedSurface& s) const {
        if (s.genus < 0) {
            throw std::invalid_argument("PuncturedSurface: genus must be non-negative");
        }
        if (s.punctures < 1) {
            throw std::invalid_argument("PuncturedSurface: puncture count must be positive");
        }
        // Homotopy equivalent to a wedge of 2g+k-1 circles.
        return GradedSpace({1, 2LL * s.genus + s.punctures - 1});
    }
    GradedSpace operator()(const ComplexProjective& s) const {
        if (s.n < 0) throw std::invalid_argument("ComplexProjective: n must be non-negative");
        std::vector<long long> b(2 * static_cast<size_t>(s.n) + 1, 0);
        for (size_t i = 0; i < b.size(); i += 2) b[i] = 1;
        return GradedSpace(b);
    }
    GradedSpace operator()(const RealProjectivePlane&) const {
        // Rational homology of a point.
        return GradedSpace({1});
    }
    GradedSpace operator()(const RawBetti& s) const { return GradedSpace(s.betti); }
};

}  // namespace

GradedSpace resolve(const SpaceSpec& spec) { return std::visit(Resolver{}, spec); }

}  // namespace symprod
