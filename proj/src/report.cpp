#include "nsurf/report.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace nsurf {

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream out;
    out << numerator(r) << "/" << denominator(r);
    return out.str();
}

std::string sign_class(long long chi) {
    if (chi < 0) return "negative";
    if (chi == 0) return "zero";
    return "positive";
}

std::string coords_str(const NormalVector& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.coords.size(); ++i) {
        if (i) out << " ";
        out << v.coords[i];
    }
    return out.str();
}

nlohmann::ordered_json entry_json(const FundamentalEntry& e, int index) {
    nlohmann::ordered_json j;
    j["index"] = index;
    std::vector<std::string> coords;
    coords.reserve(e.vec.coords.size());
    for (const Int& x : e.vec.coords) coords.push_back(x.str());
    j["coords"] = coords;
    j["chi"] = e.euler;
    j["orientable"] = e.orientable;
    if (e.orientable)
        j["genus"] = e.genus;
    else
        j["crosscaps"] = e.genus;
    j["weight"] = e.weight.str();
    j["class"] = sign_class(e.euler);
    return j;
}

}  // namespace

std::string render_report_table(const FundamentalReport& rep,
                                std::optional<long long> genus) {
    std::ostringstream out;
    out << "triangulation digest: " << rep.digest << "\n";
    out << "fundamental surfaces: " << rep.fundamentals.entries.size() << "\n\n";

    // Column widths over the actual rows.
    size_t wc = 6;
    for (const auto& e : rep.fundamentals.entries)
        wc = std::max(wc, coords_str(e.vec).size());
    out << std::left << std::setw(5) << "idx" << std::setw(static_cast<int>(wc) + 2)
        << "coords" << std::setw(6) << "chi" << std::setw(8) << "orient" << std::setw(10)
        << "genus/cc" << std::setw(8) << "weight" << "class\n";
    for (size_t i = 0; i < rep.fundamentals.entries.size(); ++i) {
        const auto& e = rep.fundamentals.entries[i];
        out << std::left << std::setw(5) << i << std::setw(static_cast<int>(wc) + 2)
            << coords_str(e.vec) << std::setw(6) << e.euler << std::setw(8)
            << (e.orientable ? "yes" : "no") << std::setw(10) << e.genus << std::setw(8)
            << e.weight.str() << sign_class(e.euler) << "\n";
    }

    out << "\nK = " << rep.K << " (fundamentals with chi < 0)\n";
    if (rep.vacuous) {
        out << "no fundamental surface has negative euler characteristic;"
            << " the bound is vacuous for every genus\n";
    } else {
        out << "P = " << rep.P << " (max -chi over them)\n";
        out << "c = " << rat_str(rep.c) << "\n";
        if (genus) {
            GenusBound b = genus_bound(rep, *genus);
            out << "genus " << *genus << ": c*(2g-2) = " << rat_str(b.exact)
                << ", bound = " << b.floor_value;
            if (b.vacuous) out << " (vacuous: below 1)";
            out << "\n";
        }
    }
    return out.str();
}

std::string render_report_json(const FundamentalReport& rep,
                               std::optional<long long> genus) {
    nlohmann::ordered_json j;
    j["digest"] = rep.digest;
    j["fundamentals"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < rep.fundamentals.entries.size(); ++i)
        j["fundamentals"].push_back(
            entry_json(rep.fundamentals.entries[i], static_cast<int>(i)));
    j["K"] = rep.K;
    j["vacuous"] = rep.vacuous;
    if (!rep.vacuous) {
        j["P"] = rep.P;
        j["c"] = rat_str(rep.c);
        if (genus) {
            GenusBound b = genus_bound(rep, *genus);
            j["genus"] = b.genus;
            j["bound_exact"] = rat_str(b.exact);
            j["bound"] = b.floor_value.str();
            j["bound_vacuous"] = b.vacuous;
        }
    }
    return j.dump(2) + "\n";
}

std::string render_validate_text(const Triangulation& tri) {
    Skeleton sk = compute_skeleton(tri);
    std::ostringstream out;
    out << "tetrahedra: " << tri.tets() << "\n";
    out << "vertices:   " << sk.vertex_count << "\n";
    out << "edges:      " << sk.edge_count << "\n";
    out << "faces:      " << sk.face_count << "\n";
    out << "V - E + F - T = "
        << sk.vertex_count - sk.edge_count + sk.face_count - tri.tets() << "\n";
    out << "orientable: " << (is_orientable(tri) ? "yes" : "no") << "\n";
    out << "digest:     " << tri.digest() << "\n";
    return out.str();
}

std::string render_validate_json(const Triangulation& tri) {
    Skeleton sk = compute_skeleton(tri);
    nlohmann::ordered_json j;
    j["digest"] = tri.digest();
    j["tets"] = tri.tets();
    j["vertices"] = sk.vertex_count;
    j["edges"] = sk.edge_count;
    j["faces"] = sk.face_count;
    j["euler"] = sk.vertex_count - sk.edge_count + sk.face_count - tri.tets();
    j["orientable"] = is_orientable(tri);
    return j.dump(2) + "\n";
}

std::string render_certificate_line(const RotationCertificate& cert) {
    std::ostringstream out;
    out << "g=" << cert.g << std::setprecision(15) << " R=" << cert.circumradius
        << " theta=" << cert.theta_at_half_r << " threshold=" << cert.threshold
        << " margin=" << cert.margin << " " << (cert.pass ? "pass" : "FAIL");
    return out.str();
}

}  // namespace nsurf
