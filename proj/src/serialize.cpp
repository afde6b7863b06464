#include "oal/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "oal/graph_io.hpp"

namespace oal {

ojson json_of(const VertexSet& s) {
    ojson arr = ojson::array();
    for (int v : s.to_vector()) arr.push_back(v);
    return arr;
}

ojson json_of(const AllianceReport& rep) {
    ojson j;
    j["holds"] = rep.holds;
    j["r"] = rep.r;
    j["global_checked"] = rep.global_checked;
    j["is_global"] = rep.is_global;
    ojson margins = ojson::object();
    for (auto [v, m] : rep.margins) margins[std::to_string(v)] = m;
    j["margins"] = margins;
    j["failing"] = rep.failing;
    return j;
}

ojson json_of(const SolveResult& res, bool with_timing) {
    ojson j;
    j["optimum"] = res.optimum;
    j["witness"] = json_of(res.witness);
    j["nodes"] = res.nodes;
    j["pruned"] = res.pruned;
    if (with_timing) j["ms"] = res.ms;
    return j;
}

ojson json_of(const SpectralReport& rep) {
    ojson j;
    j["mu_star"] = rep.mu_star;
    j["iterations"] = rep.iterations;
    j["residual"] = rep.residual;
    j["dense_fallback"] = rep.dense_fallback;
    return j;
}

ojson json_of(const BoundsReport& rep) {
    ojson j;
    j["r"] = rep.r;
    if (rep.exact)
        j["exact"] = *rep.exact;
    else
        j["exact"] = nullptr;
    ojson entries = ojson::array();
    for (const auto& e : rep.entries) {
        ojson row;
        row["name"] = e.name;
        row["kind"] = e.kind == BoundKind::lower ? "lower" : "upper";
        if (e.applicable)
            row["value"] = e.value;
        else
            row["value"] = nullptr;
        row["applicable"] = e.applicable;
        row["flagged"] = e.flagged_falsified;
        if (rep.exact && e.applicable)
            row["tight"] = e.value == *rep.exact;
        else
            row["tight"] = nullptr;
        row["note"] = e.note;
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

ojson json_of(const WitnessCertificate& cert) {
    ojson j;
    j["construction"] = cert.construction;
    j["size"] = cert.witness.size();
    j["claimed_bound"] = cert.claimed_bound;
    j["witness"] = json_of(cert.witness);
    j["report"] = json_of(cert.report);
    return j;
}

ojson json_of(const ReductionArtifact& art) {
    ojson j;
    switch (art.kind) {
        case GadgetKind::downshift: j["kind"] = "downshift"; break;
        case GadgetKind::goa_low: j["kind"] = "goa-low"; break;
        case GadgetKind::goa_high: j["kind"] = "goa-high"; break;
    }
    j["r"] = art.r;
    j["source_n"] = art.source.order();
    j["source_m"] = art.source.edge_count();
    j["n"] = art.gprime.order();
    j["m"] = art.gprime.edge_count();
    j["size_map"] = {{"scale", art.size_map.scale}, {"offset", art.size_map.offset}};
    j["edge_list"] = serialize_edge_list(art.gprime);
    ojson labels = ojson::object();
    for (size_t v = 0; v < art.labels.size(); ++v) labels[std::to_string(v)] = art.labels[v].to_string();
    j["labels"] = labels;
    return j;
}

namespace {

std::string cell(const ojson& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string table_of_rows(const ojson& rows) {
    std::vector<std::string> cols;
    for (const auto& row : rows)
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());

    std::vector<size_t> width(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    std::vector<std::vector<std::string>> grid;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (size_t c = 0; c < cols.size(); ++c) {
            line.push_back(row.contains(cols[c]) ? cell(row.at(cols[c])) : "-");
            width[c] = std::max(width[c], line.back().size());
        }
        grid.push_back(std::move(line));
    }

    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& line) {
        for (size_t c = 0; c < cols.size(); ++c) {
            if (c) out << "  ";
            out << line[c] << std::string(width[c] - line[c].size(), ' ');
        }
        out << "\n";
    };
    emit(cols);
    for (const auto& line : grid) emit(line);
    return out.str();
}

}  // namespace

std::string render_table(const ojson& j) {
    if (j.is_array()) {
        if (!j.empty() && !j.front().is_object()) return cell(j) + "\n";
        return table_of_rows(j);
    }
    if (!j.is_object()) return cell(j) + "\n";
    std::ostringstream out;
    std::vector<std::pair<std::string, const ojson*>> tables;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
            tables.emplace_back(it.key(), &it.value());
            continue;
        }
        out << it.key() << ": " << cell(it.value()) << "\n";
    }
    for (auto& [key, rows] : tables) out << "\n" << key << ":\n" << table_of_rows(*rows);
    return out.str();
}

}  // namespace oal
