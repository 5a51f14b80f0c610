#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qcl/chain.hpp"
#include "qcl/limits.hpp"
#include "qcl/puiseux.hpp"

namespace qcl {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line(line), col(col) {}
};

// vars line, then poly lines; `chain` lines separate chains.
struct SystemFile {
    VarOrder order;
    std::vector<std::vector<Poly>> chains;

    friend bool operator==(const SystemFile& a, const SystemFile& b) {
        return a.order.names == b.order.names && a.chains == b.chains;
    }
};

SystemFile parse_system(const std::string& text);
// One expression over the given variables.
Poly parse_poly(const std::string& text, const VarOrder& order);
std::string render_system(const SystemFile& sys);

RegularChain to_chain(const SystemFile& sys, std::size_t k);

enum class Format { Text, Json };

// "(a, b, c)" for rational points, "(...) where m1 = 0, ..." otherwise.
std::string render_point(const LimitPoint& p);
// Sorted by key; one point per line, or "no limit points".
std::string render_results(const std::vector<LimitPoint>& pts, Format f);
std::string render_parametrizations(const std::vector<PuiseuxParam>& pars, Format f);

}  // namespace qcl
