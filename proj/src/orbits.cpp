#include "agc/orbits.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace agc {

std::pair<int, long> OrbitDecomposition::locate(const AffinePoint& pt) const {
    auto it = locator.find({pt.x.code(), pt.y.code()});
    if (it == locator.end()) return {-1, -1};
    return it->second;
}

OrbitDecomposition decompose(const CurveSpec& spec, const std::vector<AffinePoint>& points) {
    OrbitDecomposition dec;
    dec.nu = element_order(spec.alpha);
    dec.n = (long)points.size();

    std::set<std::pair<uint32_t, uint32_t>> pset;
    for (const auto& pt : points) pset.insert({pt.x.code(), pt.y.code()});

    std::set<std::pair<uint32_t, uint32_t>> visited;
    std::vector<Orbit> longs, shorts;
    for (const auto& start : points) {
        if (visited.count({start.x.code(), start.y.code()})) continue;
        // walk the orbit once to find its base point
        std::vector<AffinePoint> walk;
        AffinePoint cur = start;
        do {
            if (!pset.count({cur.x.code(), cur.y.code()})) {
                std::ostringstream os;
                os << "decompose: orbit of (" << start.x.code() << "," << start.y.code()
                   << ") leaves the point set at (" << cur.x.code() << "," << cur.y.code() << ")";
                throw std::runtime_error(os.str());
            }
            walk.push_back(cur);
            if ((long)walk.size() > dec.nu)
                throw std::runtime_error("decompose: orbit longer than ord(sigma)");
            cur = apply_sigma(spec, cur);
        } while (!(cur == start));

        const AffinePoint* base = &walk[0];
        for (const auto& pt : walk)
            if (point_code_less(pt, *base)) base = &pt;

        Orbit orb;
        orb.kind = (base->x.is_zero() || base->y.is_zero()) ? OrbitKind::Short : OrbitKind::Long;
        AffinePoint p = *base;
        for (size_t j = 0; j < walk.size(); ++j) {
            orb.points.push_back(p);
            visited.insert({p.x.code(), p.y.code()});
            p = apply_sigma(spec, p);
        }
        for (const auto& pt : orb.points) {
            bool have_y = false, have_x = false;
            for (const auto& v : orb.y_values) have_y = have_y || v == pt.y;
            for (const auto& v : orb.x_values) have_x = have_x || v == pt.x;
            if (!have_y) orb.y_values.push_back(pt.y);
            if (!have_x) orb.x_values.push_back(pt.x);
        }
        (orb.kind == OrbitKind::Long ? longs : shorts).push_back(std::move(orb));
    }

    auto by_base = [](const Orbit& a, const Orbit& b) {
        return point_code_less(a.points[0], b.points[0]);
    };
    std::sort(longs.begin(), longs.end(), by_base);
    std::sort(shorts.begin(), shorts.end(), by_base);

    dec.r = (int)longs.size();
    dec.s = (int)shorts.size();
    dec.orbits = std::move(longs);
    dec.orbits.insert(dec.orbits.end(), shorts.begin(), shorts.end());

    long off = 0, total = 0;
    for (size_t i = 0; i < dec.orbits.size(); ++i) {
        Orbit& orb = dec.orbits[i];
        orb.index = (int)i;
        dec.offsets.push_back(off);
        for (long j = 0; j < orb.size(); ++j)
            dec.locator[{orb.points[(size_t)j].x.code(), orb.points[(size_t)j].y.code()}] = {(int)i, j};
        off += orb.size();
        total += orb.size();

        if (orb.size() <= 0 || dec.nu % orb.size() != 0)
            throw std::runtime_error("decompose: orbit length does not divide ord(sigma)");
        if (orb.kind == OrbitKind::Long) {
            if (orb.size() != dec.nu)
                throw std::runtime_error("decompose: long orbit shorter than ord(alpha)");
            if ((long)orb.x_values.size() != dec.nu)
                throw std::runtime_error("decompose: repeated x-coordinate in a long orbit");
        }
    }
    if (total != dec.n) throw std::runtime_error("decompose: orbits do not partition the points");

    if (dec.r >= 1) {
        auto rho = derive_rho(dec, spec);
        dec.rho1 = rho[0];
        dec.rho2 = rho[1];
        dec.rho3 = rho[2];
    }
    return dec;
}

std::array<long, 3> derive_rho(const OrbitDecomposition& decomp, const CurveSpec& spec) {
    if (decomp.r < 1) throw std::invalid_argument("derive_rho: no long orbits");
    long rho1 = (long)decomp.orbits[0].y_values.size();
    for (int i = 1; i < decomp.r; ++i)
        if ((long)decomp.orbits[(size_t)i].y_values.size() != rho1)
            throw std::runtime_error("derive_rho: distinct-y count differs across long orbits");
    if (decomp.nu % rho1 != 0)
        throw std::runtime_error("derive_rho: rho1 does not divide ord(alpha)");
    long rho2 = decomp.nu / rho1 - 1;
    long rho3 = rho1 - 1;

    if (spec.rho_hint) {
        const auto& h = *spec.rho_hint;
        bool ok = h[0] == rho1 && ((h[1] == rho2 && h[2] == rho3) || (h[1] == rho3 && h[2] == rho2));
        if (!ok) {
            std::ostringstream os;
            os << "derive_rho: derived (" << rho1 << "," << rho2 << "," << rho3
               << ") does not match the preset hint (" << h[0] << "," << h[1] << "," << h[2] << ")";
            throw std::runtime_error(os.str());
        }
    }
    return {rho1, rho2, rho3};
}

} // namespace agc
