#include "resolvekit/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace resolvekit {

namespace {

// Next non-comment, non-blank line tokenized as integers.
bool next_int_line(std::istream& in, std::vector<long long>& out) {
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        out.clear();
        long long v;
        while (ss >> v) out.push_back(v);
        if (!ss.eof()) throw parse_error("expected integers, got: " + line);
        if (!out.empty()) return true;
    }
    return false;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("RESOLVEKIT_DATA")) return env;
    return "data";
}

Certificate read_certificate(std::istream& in) {
    std::vector<long long> head;
    if (!next_int_line(in, head) || head.size() != 3)
        throw parse_error("certificate header must be: m k l");
    const int m = static_cast<int>(head[0]), k = static_cast<int>(head[1]),
              l = static_cast<int>(head[2]);
    std::vector<std::vector<int>> sets;
    std::vector<long long> row;
    for (int i = 0; i < l; ++i) {
        if (!next_int_line(in, row) || static_cast<int>(row.size()) != k)
            throw parse_error("certificate row " + std::to_string(i + 1) +
                              " must have k integers");
        sets.emplace_back(row.begin(), row.end());
    }
    return Certificate(m, k, std::move(sets));
}

Certificate read_certificate_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_certificate(in);
}

void write_certificate(std::ostream& out, const Certificate& cert) {
    out << cert.m << ' ' << cert.k << ' ' << cert.size() << '\n';
    for (const KSubset& s : cert.sets) {
        for (std::size_t i = 0; i < s.members.size(); ++i)
            out << (i ? " " : "") << s.members[i];
        out << '\n';
    }
}

void write_certificate_file(const std::filesystem::path& path, const Certificate& cert) {
    auto out = open_output(path);
    write_certificate(out, cert);
}

PermGroup read_group(std::istream& in) {
    std::vector<long long> head;
    if (!next_int_line(in, head) || head.size() != 2)
        throw parse_error("group header must be: n g");
    const int n = static_cast<int>(head[0]), g = static_cast<int>(head[1]);
    std::vector<Permutation> gens;
    std::vector<long long> row;
    for (int i = 0; i < g; ++i) {
        if (!next_int_line(in, row) || static_cast<int>(row.size()) != n)
            throw parse_error("generator " + std::to_string(i + 1) +
                              " must have n integers");
        gens.emplace_back(std::vector<int>(row.begin(), row.end()));
    }
    return PermGroup(n, std::move(gens));
}

PermGroup read_group_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_group(in);
}

void write_group(std::ostream& out, const PermGroup& g) {
    out << g.degree << ' ' << g.generators.size() << '\n';
    for (const Permutation& gen : g.generators) {
        for (int p = 1; p <= g.degree; ++p) out << (p > 1 ? " " : "") << gen.apply(p);
        out << '\n';
    }
}

void write_group_file(const std::filesystem::path& path, const PermGroup& g) {
    auto out = open_output(path);
    write_group(out, g);
}

SimpleGraph read_graph(std::istream& in) {
    std::vector<long long> head;
    if (!next_int_line(in, head) || head.size() != 2)
        throw parse_error("graph header must be: n e");
    const int n = static_cast<int>(head[0]), e = static_cast<int>(head[1]);
    std::vector<std::pair<int, int>> edges;
    std::vector<long long> row;
    for (int i = 0; i < e; ++i) {
        if (!next_int_line(in, row) || row.size() != 2)
            throw parse_error("edge " + std::to_string(i + 1) + " must have 2 integers");
        edges.emplace_back(static_cast<int>(row[0]), static_cast<int>(row[1]));
    }
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph read_graph_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
    out << g.vertex_count << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::filesystem::path& path, const SimpleGraph& g) {
    auto out = open_output(path);
    write_graph(out, g);
}

}  // namespace resolvekit
