#include "mhg/mhg_io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace mhg {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string write_mhg(const MixedHypergraph& h) {
    std::ostringstream out;
    out << "MHG " << kMhgFormatVersion << "\n";
    out << "V " << h.num_vertices() << "\n";
    if (h.labelled()) {
        for (int i = 0; i < h.num_vertices(); ++i) {
            out << "L " << i << " " << h.labels()[static_cast<std::size_t>(i)].to_string()
                << "\n";
        }
    }
    for (const Edge& e : h.c_edges()) {
        out << "C";
        for (int v : e) out << ' ' << v;
        out << "\n";
    }
    for (const Edge& e : h.d_edges()) {
        out << "D";
        for (int v : e) out << ' ' << v;
        out << "\n";
    }
    return out.str();
}

namespace {

int parse_int(const std::string& token, int line, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
    }
    if (pos != token.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
    }
    return value;
}

Vertex parse_label_tuple(const std::string& token, int line) {
    if (token.size() < 3 || token.front() != '(' || token.back() != ')') {
        throw ParseError(line, "expected coordinate tuple like (1,2), got '" + token + "'");
    }
    std::vector<int> coords;
    std::string body = token.substr(1, token.size() - 2);
    std::istringstream stream(body);
    std::string piece;
    while (std::getline(stream, piece, ',')) {
        const int c = parse_int(piece, line, "coordinate");
        if (c < 1) throw ParseError(line, "coordinates must be positive");
        coords.push_back(c);
    }
    if (coords.empty() || body.back() == ',') {
        throw ParseError(line, "malformed coordinate tuple '" + token + "'");
    }
    return Vertex(std::move(coords));
}

}  // namespace

MixedHypergraph parse_mhg(std::string_view text) {
    std::istringstream input{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool saw_header = false;
    std::optional<int> num_vertices;
    std::vector<std::optional<Vertex>> labels;
    EdgeSet c_edges, d_edges;

    while (std::getline(input, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream tokens(raw);
        std::vector<std::string> fields;
        std::string tok;
        while (tokens >> tok) fields.push_back(tok);
        if (fields.empty()) continue;

        if (!saw_header) {
            if (fields.size() != 2 || fields[0] != "MHG") {
                throw ParseError(line_no, "expected header 'MHG 1'");
            }
            if (parse_int(fields[1], line_no, "format version") != kMhgFormatVersion) {
                throw ParseError(line_no, "unsupported format version '" + fields[1] + "'");
            }
            saw_header = true;
            continue;
        }
        if (!num_vertices) {
            if (fields.size() != 2 || fields[0] != "V") {
                throw ParseError(line_no, "expected vertex count 'V <n>'");
            }
            const int n = parse_int(fields[1], line_no, "vertex count");
            if (n < 0) throw ParseError(line_no, "negative vertex count");
            num_vertices = n;
            labels.resize(static_cast<std::size_t>(n));
            continue;
        }

        const std::string& kind = fields[0];
        if (kind == "L") {
            if (fields.size() != 3) {
                throw ParseError(line_no, "expected 'L <index> (<coords>)'");
            }
            const int idx = parse_int(fields[1], line_no, "vertex index");
            if (idx < 0 || idx >= *num_vertices) {
                throw ParseError(line_no, "vertex index " + std::to_string(idx) +
                                              " out of range");
            }
            if (labels[static_cast<std::size_t>(idx)]) {
                throw ParseError(line_no, "duplicate label for vertex " + std::to_string(idx));
            }
            labels[static_cast<std::size_t>(idx)] = parse_label_tuple(fields[2], line_no);
        } else if (kind == "C" || kind == "D") {
            if (fields.size() < 3) {
                throw ParseError(line_no, "edge needs at least two vertex indices");
            }
            Edge e;
            for (std::size_t i = 1; i < fields.size(); ++i) {
                const int idx = parse_int(fields[i], line_no, "vertex index");
                if (idx < 0 || idx >= *num_vertices) {
                    throw ParseError(line_no, "vertex index " + std::to_string(idx) +
                                                  " out of range");
                }
                e.push_back(idx);
            }
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
                throw ParseError(line_no, "repeated vertex index in edge");
            }
            EdgeSet& family = kind == "C" ? c_edges : d_edges;
            if (!family.insert(std::move(e)).second) {
                throw ParseError(line_no, std::string("duplicate ") + kind + "-edge");
            }
        } else {
            throw ParseError(line_no, "unknown record '" + kind + "'");
        }
    }

    if (!saw_header) throw ParseError(line_no, "missing header 'MHG 1'");
    if (!num_vertices) throw ParseError(line_no, "missing vertex count 'V <n>'");

    const std::size_t labelled =
        static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(),
                                               [](const auto& l) { return l.has_value(); }));
    if (labelled == 0) {
        return MixedHypergraph(*num_vertices, std::move(c_edges), std::move(d_edges));
    }
    if (labelled != labels.size()) {
        throw ParseError(line_no, "labels must cover every vertex or none");
    }
    std::vector<Vertex> all;
    all.reserve(labels.size());
    for (auto& l : labels) all.push_back(std::move(*l));
    for (const Vertex& v : all) {
        if (v.coords.size() != all.front().coords.size()) {
            throw ParseError(line_no, "inconsistent label arity");
        }
    }
    return MixedHypergraph(std::move(all), std::move(c_edges), std::move(d_edges));
}

}  // namespace mhg
