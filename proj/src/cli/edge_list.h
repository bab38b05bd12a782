#ifndef HOPDOM_CLI_EDGE_LIST_H_
#define HOPDOM_CLI_EDGE_LIST_H_

#include <istream>
#include <ostream>
#include <string>

#include "hopdom/graph.h"

namespace hopdom::cli {

// Header "n m", then m lines "u v" (0-indexed). Blank lines and lines whose
// first non-space character is '#' are skipped. Every failure, including
// graph validation, is a kParseError whose message starts "line N:".
Graph ParseEdgeList(std::istream& in);
Graph ParseEdgeList(const std::string& text);

// kIoError if the file cannot be opened.
Graph ReadEdgeListFile(const std::string& path);

// Canonical form: header, then the sorted edge list.
void WriteEdgeList(const Graph& g, std::ostream& out);
std::string FormatEdgeList(const Graph& g);

}  // namespace hopdom::cli

#endif  // HOPDOM_CLI_EDGE_LIST_H_
