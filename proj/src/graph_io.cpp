#include "hooke/graph_io.hpp"

#include <sstream>

#include <json.hpp>

#include "hooke/io.hpp"

namespace hooke {

std::string fomenko_to_dot(const FomenkoGraph& g) {
    std::ostringstream os;
    os << "graph fomenko {\n";
    os << "  // band: " << to_string(g.band) << "\n";
    os << "  energy = " << format_g17(g.energy) << "\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const FomenkoVertex& v = g.vertices[i];
        os << "  v" << i << " [atom=" << to_string(v.atom)
           << " label=\"" << v.label << "\" lambda2=" << format_g17(v.lambda2)
           << "]\n";
    }
    for (const FomenkoEdge& e : g.edges) {
        os << "  v" << e.from << " -- v" << e.to;
        if (e.r || e.eps) {
            os << " [";
            if (e.r) os << "r=" << format_g17(*e.r);
            if (e.r && e.eps) os << ' ';
            if (e.eps) os << "eps=" << *e.eps;
            os << ']';
        }
        os << "\n";
    }
    for (const FomenkoFamily& fam : g.families) {
        os << "  family [";
        if (fam.n) os << "n=" << *fam.n << ' ';
        os << "members=\"";
        for (std::size_t i = 0; i < fam.members.size(); ++i) {
            if (i) os << ' ';
            os << 'v' << fam.members[i];
        }
        os << "\"]\n";
    }
    os << "}\n";
    return os.str();
}

std::string fomenko_to_json(const FomenkoGraph& g) {
    nlohmann::json j;
    j["band"] = to_string(g.band);
    j["energy"] = g.energy;
    j["vertices"] = nlohmann::json::array();
    for (const FomenkoVertex& v : g.vertices) {
        j["vertices"].push_back({{"atom", to_string(v.atom)},
                                 {"label", v.label},
                                 {"lambda2", v.lambda2}});
    }
    j["edges"] = nlohmann::json::array();
    for (const FomenkoEdge& e : g.edges) {
        nlohmann::json je{{"from", e.from}, {"to", e.to}};
        if (e.r) je["r"] = *e.r;
        if (e.eps) je["eps"] = *e.eps;
        j["edges"].push_back(je);
    }
    j["families"] = nlohmann::json::array();
    for (const FomenkoFamily& fam : g.families) {
        nlohmann::json jf{{"members", fam.members}};
        if (fam.n) jf["n"] = *fam.n;
        j["families"].push_back(jf);
    }
    return j.dump(2) + "\n";
}

}  // namespace hooke
