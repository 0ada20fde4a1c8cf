#include "evec/instance.hpp"

#include <charconv>
#include <cstdio>
#include <random>
#include <vector>

#include "evec/errors.hpp"

namespace evec {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) tokens.push_back(s.substr(start, i - start));
    }
    return tokens;
}

int parse_int(std::string_view token, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error("expected an integer, got '" + std::string(token) + "'",
                          line_no);
    return value;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
    InstanceFile inst;
    bool have_n = false;
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<char> seen;  // duplicate detection, n*n once n is known

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            std::string_view comment = trim(line.substr(hash + 1));
            if (!inst.name && comment.substr(0, 5) == "name:")
                inst.name = std::string(trim(comment.substr(5)));
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto tokens = split_ws(line);
        if (!have_n) {
            if (tokens.size() != 1)
                throw parse_error("expected the vertex count on the first line",
                                  line_no);
            n = parse_int(tokens[0], line_no);
            if (n < 0) throw parse_error("vertex count must be nonnegative", line_no);
            seen.assign(static_cast<std::size_t>(n) * n, 0);
            have_n = true;
            continue;
        }
        if (tokens.size() != 2)
            throw parse_error("expected an arc line 'u v'", line_no);
        const int u = parse_int(tokens[0], line_no);
        const int v = parse_int(tokens[1], line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("arc endpoint out of range [0.." +
                              std::to_string(n - 1) + "]", line_no);
        if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u),
                                      line_no);
        if (seen[static_cast<std::size_t>(u) * n + v])
            throw parse_error("duplicate arc (" + std::to_string(u) + "," +
                              std::to_string(v) + ")", line_no);
        seen[static_cast<std::size_t>(u) * n + v] = 1;
        arcs.emplace_back(u, v);
    }
    if (!have_n) throw parse_error("missing vertex count", line_no);
    inst.graph = Digraph(n, std::move(arcs));
    return inst;
}

std::string serialize_instance(const InstanceFile& inst) {
    std::string out;
    if (inst.name) out += "# name: " + *inst.name + "\n";
    out += std::to_string(inst.graph.vertex_count()) + "\n";
    for (const auto& [u, v] : inst.graph.arcs())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string serialize_instance(const Digraph& d) {
    return serialize_instance(InstanceFile{d, {}});
}

namespace {

void check_size(int n) {
    if (n < 0) throw input_error("size parameter must be nonnegative");
}

}  // namespace

Digraph gen_path(int n) {
    check_size(n);
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(n, std::move(arcs));
}

Digraph gen_total_order(int n) {
    check_size(n);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
    return Digraph(n, std::move(arcs));
}

Digraph gen_antichain(int n) {
    check_size(n);
    return Digraph(n, {});
}

Digraph gen_standard_example(int k) {
    check_size(k);
    std::vector<Arc> arcs;  // a_i = i, b_j = k + j
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) arcs.emplace_back(i, k + j);
    return Digraph(2 * k, std::move(arcs));
}

Digraph gen_figure1() {
    return Digraph(4, {{0, 2}, {1, 2}, {1, 3}});
}

Digraph gen_random_dag(int n, double p, std::uint64_t seed) {
    check_size(n);
    if (!(p >= 0.0 && p <= 1.0))
        throw input_error("arc probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    const auto next_real = [&rng] {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (next_real() < p) arcs.emplace_back(i, j);
    // Fisher-Yates from the top, then relabel every arc.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i >= 1; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    for (auto& [u, v] : arcs) {
        u = perm[u];
        v = perm[v];
    }
    return Digraph(n, std::move(arcs));
}

InstanceFile generate(const std::string& family, const GenParams& params) {
    InstanceFile inst;
    if (family == "path") {
        inst.graph = gen_path(params.n);
        inst.name = "path(" + std::to_string(params.n) + ")";
    } else if (family == "total_order") {
        inst.graph = gen_total_order(params.n);
        inst.name = "total_order(" + std::to_string(params.n) + ")";
    } else if (family == "antichain") {
        inst.graph = gen_antichain(params.n);
        inst.name = "antichain(" + std::to_string(params.n) + ")";
    } else if (family == "standard_example") {
        inst.graph = gen_standard_example(params.n);
        inst.name = "standard_example(" + std::to_string(params.n) + ")";
    } else if (family == "random_dag") {
        inst.graph = gen_random_dag(params.n, params.p, params.seed);
        inst.name = "random_dag(n=" + std::to_string(params.n) +
                    ",p=" + format_double(params.p) +
                    ",seed=" + std::to_string(params.seed) + ")";
    } else if (family == "figure1") {
        inst.graph = gen_figure1();
        inst.name = "figure1";
    } else {
        throw input_error("unknown family '" + family + "'");
    }
    return inst;
}

}  // namespace evec
