#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace tc {

/* All input validation failures throw tc::error. The CLI maps it to exit
   code 2; library callers may catch it. */
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/* Variable-label order: byte-wise on the alphabetic prefix, then labels
   without a numeric suffix before labels with one, then numeric suffixes
   compared as numbers. Gives A < B < U < V < V1 < V2 < V10 < W < W1. */
int label_cmp(const std::string& a, const std::string& b);

struct label_less {
    bool operator()(const std::string& a, const std::string& b) const {
        return label_cmp(a, b) < 0;
    }
};

/* Whitespace tokenizer; never returns empty tokens. */
std::vector<std::string> split_ws(const std::string& line);

/* Strips a trailing comment starting at '#' and surrounding blanks. */
std::string strip_comment(const std::string& line);

} // namespace tc
