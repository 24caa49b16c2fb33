#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "discokit/discovery.hpp"
#include "discokit/gadgets.hpp"
#include "discokit/graph.hpp"
#include "discokit/kernelize.hpp"
#include "discokit/mmo.hpp"
#include "discokit/pathdecomp.hpp"

// Line-oriented text serialization. Every writer emits a `# disco-kit v1`
// header line; every parser skips `#` and `c` comment lines and blank
// lines. Each writer round-trips: parsing its output yields an equal
// object.
//
// Formats:
//   graph          `p <n> <m>` then m lines `e <u> <v>` (0-based ids)
//   decomposition  `pd <numBags> <width>` then one line per bag `b <id...>`
//   instance       graph block, then `problem <VC|IS|DS|SP|MAT|VCUT>`,
//                  `tokens <id...>` (edge tokens as `u-v` pairs),
//                  `budget <b>`, optional `terminals <a> <b>`
//   mmo            graph block, `w <u> <v> <sigma>` per edge, `r <value>`,
//                  then a decomposition block
//   kernel report  instance block, `map <count>` with `<orig> -> <kernel>`
//                  lines, then an `audit` block (counts, claimed bound,
//                  pass/fail, layer sizes), `rejected <0|1>`, optional note
//   sequence       `seq <numConfigs> <v|e>` then one line per configuration
//                  `s <tokens...>`
//   labels         `<id> <symbol>` per vertex, ids 0..n-1 in order
//   provenance     report-style `key: value` lines (source, budget-formula,
//                  optional claimed-width, repeated note)
namespace disco::io {

// Parse failure, carrying the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

std::string write_graph(const Graph& g);
std::string write_pd(const PathDecomposition& pd);
std::string write_instance(const DiscoveryInstance& inst);
std::string write_mmo(const MMOInstance& mmo);
std::string write_kernel_report(const KernelReport& rep);
std::string write_sequence(const DiscoverySequence& seq);
// Throws std::invalid_argument when a label is empty or contains whitespace.
std::string write_labels(const std::vector<std::string>& labels);
std::string write_provenance(const Provenance& prov);

Graph parse_graph(const std::string& text);
PathDecomposition parse_pd(const std::string& text);
DiscoveryInstance parse_instance(const std::string& text);
MMOInstance parse_mmo(const std::string& text);
KernelReport parse_kernel_report(const std::string& text);
DiscoverySequence parse_sequence(const std::string& text);
std::vector<std::string> parse_labels(const std::string& text);
Provenance parse_provenance(const std::string& text);

}  // namespace disco::io
