#include "discokit/io.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace disco::io {
namespace {

constexpr const char* kHeader = "# disco-kit v1";

// --- line cursor ---------------------------------------------------------

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream in(line);
    std::string w;
    while (in >> w) words.push_back(std::move(w));
    return words;
}

// Walks the text one non-comment, non-blank line at a time and reports the
// 1-based line number of whatever it last handed out.
class Lines {
public:
    explicit Lines(const std::string& text) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t nl = text.find('\n', pos);
            if (nl == std::string::npos) nl = text.size();
            std::string line = text.substr(pos, nl - pos);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines_.push_back(std::move(line));
            if (nl == text.size()) break;
            pos = nl + 1;
        }
    }

    // Next meaningful line, or nullopt at end of input.
    std::optional<std::string> next() {
        while (idx_ < lines_.size()) {
            const std::string& line = lines_[idx_++];
            if (line.empty()) continue;
            if (line[0] == '#') continue;
            if (line.size() >= 1 && line[0] == 'c' && (line.size() == 1 || line[1] == ' '))
                continue;
            return line;
        }
        return std::nullopt;
    }

    void push_back() { --idx_; }  // un-read the line just returned
    int line_no() const { return static_cast<int>(idx_); }

private:
    std::vector<std::string> lines_;
    size_t idx_ = 0;
};

[[noreturn]] void fail(const Lines& in, const std::string& what) {
    throw ParseError(in.line_no(), what);
}

std::string require_line(Lines& in, const std::string& what) {
    std::optional<std::string> line = in.next();
    if (!line) fail(in, "unexpected end of input, expected " + what);
    return *line;
}

std::int64_t to_number(const Lines& in, const std::string& word) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
        fail(in, "expected a number, got '" + word + "'");
    }
    return value;
}

int to_int(const Lines& in, const std::string& word) {
    const std::int64_t value = to_number(in, word);
    if (value < INT32_MIN || value > INT32_MAX) fail(in, "number out of range: " + word);
    return static_cast<int>(value);
}

// `u-v` pair used for edge tokens.
EdgeId to_edge_pair(const Lines& in, const std::string& word) {
    const size_t dash = word.find('-', 1);  // a leading '-' would be a sign
    if (dash == std::string::npos) fail(in, "expected an edge token 'u-v', got '" + word + "'");
    return EdgeId(to_int(in, word.substr(0, dash)), to_int(in, word.substr(dash + 1)));
}

void expect_end(Lines& in) {
    if (in.next()) fail(in, "trailing content after the object");
}

// --- graph ----------------------------------------------------------------

void write_graph_block(std::ostringstream& out, const Graph& g) {
    out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (const EdgeId& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
}

Graph parse_graph_block(Lines& in) {
    const std::vector<std::string> head = split_words(require_line(in, "a graph header"));
    if (head.size() != 3 || head[0] != "p") fail(in, "expected graph header 'p <n> <m>'");
    const int n = to_int(in, head[1]);
    const int m = to_int(in, head[2]);
    if (n < 0 || m < 0) fail(in, "graph header counts must be nonnegative");
    std::vector<EdgeId> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        const std::vector<std::string> words = split_words(require_line(in, "an edge line"));
        if (words.size() != 3 || words[0] != "e") fail(in, "expected edge line 'e <u> <v>'");
        edges.push_back(EdgeId(to_int(in, words[1]), to_int(in, words[2])));
    }
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        fail(in, e.what());
    }
}

// --- decomposition ---------------------------------------------------------

void write_pd_block(std::ostringstream& out, const PathDecomposition& pd) {
    out << "pd " << pd.bags.size() << " " << (pd.bags.empty() ? -1 : width(pd)) << "\n";
    for (const std::vector<Vertex>& bag : pd.bags) {
        out << "b";
        for (Vertex v : bag) out << " " << v;
        out << "\n";
    }
}

PathDecomposition parse_pd_block(Lines& in) {
    const std::vector<std::string> head = split_words(require_line(in, "a decomposition header"));
    if (head.size() != 3 || head[0] != "pd") {
        fail(in, "expected decomposition header 'pd <numBags> <width>'");
    }
    const int bags = to_int(in, head[1]);
    const int claimed_width = to_int(in, head[2]);
    if (bags < 0) fail(in, "bag count must be nonnegative");
    PathDecomposition pd;
    pd.bags.reserve(static_cast<size_t>(bags));
    int max_bag = 0;
    for (int i = 0; i < bags; ++i) {
        const std::vector<std::string> words = split_words(require_line(in, "a bag line"));
        if (words.empty() || words[0] != "b") fail(in, "expected bag line 'b <id...>'");
        std::vector<Vertex> bag;
        for (size_t j = 1; j < words.size(); ++j) bag.push_back(to_int(in, words[j]));
        max_bag = std::max(max_bag, static_cast<int>(bag.size()));
        pd.bags.push_back(std::move(bag));
    }
    if (bags > 0 && claimed_width != max_bag - 1) {
        fail(in, "stated width " + std::to_string(claimed_width) + " does not match the bags");
    }
    return pd;
}

// --- tokens -----------------------------------------------------------------

void write_token_line(std::ostringstream& out, const TokenConfiguration& c) {
    out << "tokens";
    if (c.kind == TokenKind::Vertex) {
        for (Vertex v : c.vertices) out << " " << v;
    } else {
        for (const EdgeId& e : c.edges) out << " " << e.u << "-" << e.v;
    }
    out << "\n";
}

TokenConfiguration parse_token_words(Lines& in, const std::vector<std::string>& words,
                                     TokenKind kind) {
    try {
        if (kind == TokenKind::Vertex) {
            std::vector<Vertex> vs;
            for (size_t i = 1; i < words.size(); ++i) vs.push_back(to_int(in, words[i]));
            return TokenConfiguration::of_vertices(std::move(vs));
        }
        std::vector<EdgeId> es;
        for (size_t i = 1; i < words.size(); ++i) es.push_back(to_edge_pair(in, words[i]));
        return TokenConfiguration::of_edges(std::move(es));
    } catch (const std::invalid_argument& e) {
        fail(in, e.what());
    }
}

// --- instance ----------------------------------------------------------------

void write_instance_block(std::ostringstream& out, const DiscoveryInstance& inst) {
    write_graph_block(out, inst.graph);
    out << "problem " << to_string(inst.problem) << "\n";
    write_token_line(out, inst.start);
    out << "budget " << inst.budget << "\n";
    if (inst.terminals) {
        out << "terminals " << inst.terminals->first << " " << inst.terminals->second << "\n";
    }
}

Problem parse_problem(Lines& in, const std::string& word) {
    if (word == "VC") return Problem::VC;
    if (word == "IS") return Problem::IS;
    if (word == "DS") return Problem::DS;
    if (word == "SP") return Problem::SP;
    if (word == "MAT") return Problem::MAT;
    if (word == "VCUT") return Problem::VCUT;
    fail(in, "unknown problem '" + word + "'");
}

DiscoveryInstance parse_instance_block(Lines& in) {
    DiscoveryInstance inst;
    inst.graph = parse_graph_block(in);

    std::vector<std::string> words = split_words(require_line(in, "a problem line"));
    if (words.size() != 2 || words[0] != "problem") fail(in, "expected 'problem <name>'");
    inst.problem = parse_problem(in, words[1]);

    words = split_words(require_line(in, "a tokens line"));
    if (words.empty() || words[0] != "tokens") fail(in, "expected 'tokens <id...>'");
    inst.start = parse_token_words(
        in, words, inst.problem == Problem::MAT ? TokenKind::Edge : TokenKind::Vertex);

    words = split_words(require_line(in, "a budget line"));
    if (words.size() != 2 || words[0] != "budget") fail(in, "expected 'budget <b>'");
    inst.budget = to_number(in, words[1]);

    if (std::optional<std::string> line = in.next()) {
        words = split_words(*line);
        if (words.size() == 3 && words[0] == "terminals") {
            inst.terminals = std::make_pair(to_int(in, words[1]), to_int(in, words[2]));
        } else {
            in.push_back();
        }
    }
    return inst;
}

// --- report lines ---------------------------------------------------------

std::string rest_after(const std::string& line, const std::string& key) {
    // line is known to start with key; the value is what follows the space.
    if (line.size() <= key.size()) return "";
    return line.substr(key.size() + 1);
}

}  // namespace

// --- graph ------------------------------------------------------------------

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << kHeader << "\n";
    write_graph_block(out, g);
    return out.str();
}

Graph parse_graph(const std::string& text) {
    Lines in(text);
    Graph g = parse_graph_block(in);
    expect_end(in);
    return g;
}

// --- decomposition ------------------------------------------------------------

std::string write_pd(const PathDecomposition& pd) {
    std::ostringstream out;
    out << kHeader << "\n";
    write_pd_block(out, pd);
    return out.str();
}

PathDecomposition parse_pd(const std::string& text) {
    Lines in(text);
    PathDecomposition pd = parse_pd_block(in);
    expect_end(in);
    return pd;
}

// --- instance ------------------------------------------------------------------

std::string write_instance(const DiscoveryInstance& inst) {
    std::ostringstream out;
    out << kHeader << "\n";
    write_instance_block(out, inst);
    return out.str();
}

DiscoveryInstance parse_instance(const std::string& text) {
    Lines in(text);
    DiscoveryInstance inst = parse_instance_block(in);
    expect_end(in);
    return inst;
}

// --- mmo -------------------------------------------------------------------

std::string write_mmo(const MMOInstance& mmo) {
    std::ostringstream out;
    out << kHeader << "\n";
    write_graph_block(out, mmo.host);
    const std::vector<EdgeId>& edges = mmo.host.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        out << "w " << edges[i].u << " " << edges[i].v << " " << mmo.sigma[i] << "\n";
    }
    out << "r " << mmo.r << "\n";
    write_pd_block(out, mmo.pd);
    return out.str();
}

MMOInstance parse_mmo(const std::string& text) {
    Lines in(text);
    MMOInstance mmo;
    mmo.host = parse_graph_block(in);
    mmo.sigma.assign(static_cast<size_t>(mmo.host.num_edges()), 0);
    std::vector<char> seen(mmo.sigma.size(), 0);
    for (int i = 0; i < mmo.host.num_edges(); ++i) {
        const std::vector<std::string> words = split_words(require_line(in, "a weight line"));
        if (words.size() != 4 || words[0] != "w") fail(in, "expected 'w <u> <v> <sigma>'");
        const EdgeId e(to_int(in, words[1]), to_int(in, words[2]));
        const std::optional<int> idx = mmo.host.edge_index(e);
        if (!idx) fail(in, "weight line names a missing edge");
        if (seen[static_cast<size_t>(*idx)]) fail(in, "weight line repeats an edge");
        seen[static_cast<size_t>(*idx)] = 1;
        mmo.sigma[static_cast<size_t>(*idx)] = to_int(in, words[3]);
    }
    const std::vector<std::string> words = split_words(require_line(in, "a bound line"));
    if (words.size() != 2 || words[0] != "r") fail(in, "expected 'r <value>'");
    mmo.r = to_int(in, words[1]);
    mmo.pd = parse_pd_block(in);
    expect_end(in);
    return mmo;
}

// --- kernel report ------------------------------------------------------------

std::string write_kernel_report(const KernelReport& rep) {
    std::ostringstream out;
    out << kHeader << "\n";
    write_instance_block(out, rep.kernel);
    out << "map " << rep.vertex_map.size() << "\n";
    for (const auto& [orig, kernel] : rep.vertex_map) {
        out << orig << " -> " << kernel << "\n";
    }
    out << "audit\n";
    out << "vertices " << rep.audit.vertex_count << "\n";
    out << "edges " << rep.audit.edge_count << "\n";
    out << "budget " << rep.audit.budget << "\n";
    if (!rep.audit.bound_claimed.empty()) out << "bound " << rep.audit.bound_claimed << "\n";
    out << "bound-audited " << (rep.audit.bound_audited ? 1 : 0) << "\n";
    out << "bound-satisfied " << (rep.audit.bound_satisfied ? 1 : 0) << "\n";
    for (const auto& entry : rep.audit.layer_sizes) {
        out << "layer " << entry[0] << " " << entry[1] << " " << entry[2] << "\n";
    }
    out << "rejected " << (rep.rejected ? 1 : 0) << "\n";
    if (!rep.note.empty()) out << "note " << rep.note << "\n";
    return out.str();
}

KernelReport parse_kernel_report(const std::string& text) {
    Lines in(text);
    KernelReport rep;
    rep.kernel = parse_instance_block(in);

    std::vector<std::string> words = split_words(require_line(in, "a map header"));
    if (words.size() != 2 || words[0] != "map") fail(in, "expected 'map <count>'");
    const int pairs = to_int(in, words[1]);
    for (int i = 0; i < pairs; ++i) {
        words = split_words(require_line(in, "a map line"));
        if (words.size() != 3 || words[1] != "->") fail(in, "expected '<orig> -> <kernel>'");
        rep.vertex_map.emplace_back(to_int(in, words[0]), to_int(in, words[2]));
    }

    if (require_line(in, "an audit block") != "audit") fail(in, "expected 'audit'");
    words = split_words(require_line(in, "a vertex count"));
    if (words.size() != 2 || words[0] != "vertices") fail(in, "expected 'vertices <n>'");
    rep.audit.vertex_count = to_int(in, words[1]);
    words = split_words(require_line(in, "an edge count"));
    if (words.size() != 2 || words[0] != "edges") fail(in, "expected 'edges <m>'");
    rep.audit.edge_count = to_int(in, words[1]);
    words = split_words(require_line(in, "a budget line"));
    if (words.size() != 2 || words[0] != "budget") fail(in, "expected 'budget <b>'");
    rep.audit.budget = to_number(in, words[1]);

    std::string line = require_line(in, "a bound or bound-audited line");
    if (split_words(line)[0] == "bound") {
        rep.audit.bound_claimed = rest_after(line, "bound");
        line = require_line(in, "a bound-audited line");
    }
    words = split_words(line);
    if (words.size() != 2 || words[0] != "bound-audited") fail(in, "expected 'bound-audited <0|1>'");
    rep.audit.bound_audited = to_int(in, words[1]) != 0;
    words = split_words(require_line(in, "a bound-satisfied line"));
    if (words.size() != 2 || words[0] != "bound-satisfied") {
        fail(in, "expected 'bound-satisfied <0|1>'");
    }
    rep.audit.bound_satisfied = to_int(in, words[1]) != 0;

    line = require_line(in, "a layer or rejected line");
    words = split_words(line);
    while (words.size() == 4 && words[0] == "layer") {
        rep.audit.layer_sizes.push_back(
            {to_int(in, words[1]), to_int(in, words[2]), to_int(in, words[3])});
        line = require_line(in, "a layer or rejected line");
        words = split_words(line);
    }
    if (words.size() != 2 || words[0] != "rejected") fail(in, "expected 'rejected <0|1>'");
    rep.rejected = to_int(in, words[1]) != 0;

    if (std::optional<std::string> tail = in.next()) {
        if (split_words(*tail)[0] != "note") fail(in, "expected 'note <text>'");
        rep.note = rest_after(*tail, "note");
    }
    expect_end(in);
    return rep;
}

// --- sequence ------------------------------------------------------------------

std::string write_sequence(const DiscoverySequence& seq) {
    std::ostringstream out;
    out << kHeader << "\n";
    const bool edge_kind =
        !seq.configs.empty() && seq.configs.front().kind == TokenKind::Edge;
    out << "seq " << seq.configs.size() << " " << (edge_kind ? "e" : "v") << "\n";
    for (const TokenConfiguration& c : seq.configs) {
        out << "s";
        if (c.kind == TokenKind::Vertex) {
            for (Vertex v : c.vertices) out << " " << v;
        } else {
            for (const EdgeId& e : c.edges) out << " " << e.u << "-" << e.v;
        }
        out << "\n";
    }
    return out.str();
}

DiscoverySequence parse_sequence(const std::string& text) {
    Lines in(text);
    const std::vector<std::string> head = split_words(require_line(in, "a sequence header"));
    if (head.size() != 3 || head[0] != "seq" || (head[2] != "v" && head[2] != "e")) {
        fail(in, "expected sequence header 'seq <numConfigs> <v|e>'");
    }
    const int count = to_int(in, head[1]);
    const TokenKind kind = head[2] == "e" ? TokenKind::Edge : TokenKind::Vertex;
    DiscoverySequence seq;
    for (int i = 0; i < count; ++i) {
        const std::vector<std::string> words =
            split_words(require_line(in, "a configuration line"));
        if (words.empty() || words[0] != "s") fail(in, "expected configuration line 's <tokens>'");
        seq.configs.push_back(parse_token_words(in, words, kind));
    }
    expect_end(in);
    return seq;
}

// --- labels --------------------------------------------------------------------

std::string write_labels(const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << kHeader << "\n";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty() || labels[i].find_first_of(" \t\r\n") != std::string::npos) {
            throw std::invalid_argument("labels must be nonempty and free of whitespace");
        }
        out << i << " " << labels[i] << "\n";
    }
    return out.str();
}

std::vector<std::string> parse_labels(const std::string& text) {
    Lines in(text);
    std::vector<std::string> labels;
    while (std::optional<std::string> line = in.next()) {
        const std::vector<std::string> words = split_words(*line);
        if (words.size() != 2) fail(in, "expected label line '<id> <symbol>'");
        if (to_int(in, words[0]) != static_cast<int>(labels.size())) {
            fail(in, "label ids must count up from 0 in order");
        }
        labels.push_back(words[1]);
    }
    return labels;
}

// --- provenance -----------------------------------------------------------------

std::string write_provenance(const Provenance& prov) {
    std::ostringstream out;
    out << kHeader << "\n";
    out << "source: " << prov.source << "\n";
    out << "budget-formula: " << prov.budget_formula << "\n";
    if (prov.claimed_width) out << "claimed-width: " << *prov.claimed_width << "\n";
    for (const std::string& note : prov.notes) out << "note: " << note << "\n";
    return out.str();
}

Provenance parse_provenance(const std::string& text) {
    Lines in(text);
    Provenance prov;
    bool saw_source = false;
    bool saw_formula = false;
    while (std::optional<std::string> line = in.next()) {
        const size_t colon = line->find(':');
        if (colon == std::string::npos) fail(in, "expected 'key: value'");
        const std::string key = line->substr(0, colon);
        const std::string value =
            line->size() > colon + 1 ? line->substr(colon + 2) : std::string();
        if (key == "source") {
            prov.source = value;
            saw_source = true;
        } else if (key == "budget-formula") {
            prov.budget_formula = value;
            saw_formula = true;
        } else if (key == "claimed-width") {
            prov.claimed_width = to_int(in, value);
        } else if (key == "note") {
            prov.notes.push_back(value);
        } else {
            fail(in, "unknown provenance key '" + key + "'");
        }
    }
    if (!saw_source || !saw_formula) {
        fail(in, "provenance needs source and budget-formula lines");
    }
    return prov;
}

}  // namespace disco::io
