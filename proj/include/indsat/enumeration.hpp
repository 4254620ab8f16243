#pragma once
// Corpus scanning: run the induced-saturation check over a graph6 record
// stream or over every labeled graph of a small order. Scans are
// embarrassingly parallel over records; summaries are merged in record
// order, so output never depends on the thread count.

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "indsat/graph.hpp"

namespace indsat {

struct ScanHit {
    std::string graph6;
    int order;
    friend bool operator==(const ScanHit&, const ScanHit&) = default;
};

struct ScanSummary {
    std::string filter;
    long long graphs_examined = 0;
    long long malformed_records = 0;
    std::vector<std::string> record_errors;  // "record N: ..." (lenient mode)
    std::vector<ScanHit> hits;               // input order
    double elapsed_seconds = 0.0;

    std::string to_text(bool include_timing = true) const;
    std::string to_json() const;
};

/// Graph of the given order whose edge set is encoded by `edge_mask`: bit t
/// covers the t-th pair (u,v), u < v, in lexicographic order. Orders up to
/// 11 (the pair count must fit 64 bits).
Graph labeled_graph(int order, std::uint64_t edge_mask);

/// Reads one graph6 record per line and reports the records whose graphs
/// are target-induced-saturated. A leading ">>graph6<<" header is skipped.
/// Malformed records abort the scan in strict mode and are counted and
/// skipped otherwise.
ScanSummary scan_stream(std::istream& in, const Graph& target, bool strict = true,
                        int threads = 0);
ScanSummary scan_stream_serial(std::istream& in, const Graph& target,
                               bool strict = true);

/// Scans all 2^(order choose 2) labeled graphs of the given order; hits are
/// deduplicated up to isomorphism in the summary. Orders above 7 exceed the
/// documented runtime bound; scan an externally generated corpus with
/// scan_stream instead.
ScanSummary exhaust_labeled(int order, const Graph& target, int threads = 0);
ScanSummary exhaust_labeled_serial(int order, const Graph& target);

}  // namespace indsat
