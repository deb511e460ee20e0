#include "thetapark/combinatorial.hpp"

#include <stdexcept>

namespace thetapark {

EExpansion combinatorial_expansion(char kind, const Partition& lambda, const Partition& gamma) {
    if (kind != 'e' && kind != 's') throw std::invalid_argument("kind must be 'e' or 's'");
    EExpansion out(lambda.size());
    auto record = [&](const PathPair& p) {
        out.add_term(e_composition(p).sorted(), QPoly::monomial(static_cast<int>(area(p))));
    };
    if (kind == 'e')
        for_each_pf(gamma, lambda.parts(), record);
    else
        for_each_lpf(gamma, lambda.conjugate(), record);
    return out;
}

EExpansion s_labeled_expansion(SubsetStat s, const Partition& lambda, const Partition& gamma) {
    EExpansion out(lambda.size());
    for_each_s_labeled_pp(s, lambda.parts(), gamma, [&](const PathPair& p) {
        out.add_term(eta_partition(p.top), QPoly::monomial(static_cast<int>(area(p))));
    });
    return out;
}

QPoly two_car_area_gf(int n, int m) {
    QPoly gf;
    for_each_pf(Partition{}, {n, m}, [&](const PathPair& p) {
        gf += QPoly::monomial(static_cast<int>(area(p)));
    });
    return gf;
}

QPoly polyomino_area_gf(int width, int height) {
    QPoly gf;
    for_each_polyomino(width, height, [&](const std::string& top, const std::string& bottom) {
        gf += QPoly::monomial(static_cast<int>(polyomino_area(top, bottom)));
    });
    return gf;
}

} // namespace thetapark
