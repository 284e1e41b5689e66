#pragma once

#include <compare>
#include <variant>
#include <vector>

namespace symprod {

// Rational Betti data of a space: betti_list()[d] = dim H_d(X; Q).
class GradedSpace {
public:
    explicit GradedSpace(std::vector<long long> betti);

    int top_degree() const { return static_cast<int>(betti_.size()) - 1; }
    long long betti(int d) const;
    const std::vector<long long>& betti_list() const { return betti_; }
    long long total_dim() const;

    friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

private:
    std::vector<long long> betti_;
};

long long euler_char(const GradedSpace& space);

struct Sphere {
    int dim = 1;
};
struct ClosedSurface {
    int genus = 0;
};
struct PuncturedSurface {
    int genus = 0;
    int punctures = 1;
};
struct ComplexProjective {
    int n = 0;
};
struct RealProjectivePlane {};
struct RawBetti {
    std::vector<long long> betti;
};

using SpaceSpec = std::variant<Sphere, ClosedSurface, PuncturedSurface, ComplexProjective,
                               RealProjectivePlane, RawBetti>;

GradedSpace resolve(const SpaceSpec& spec);

}  // namespace symprod
