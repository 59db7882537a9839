#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matchext/graph.hpp"
#include "matchext/matching.hpp"

namespace matchext {

struct CertificateEntry {
  Matching key;      // size-k matching
  Matching perfect;  // perfect matching containing key
};

/// For every size-k matching of the host, a perfect matching containing it.
/// Entries are sorted by key.
struct ExtendabilityCertificate {
  std::string graph_hash;  // canonical graph6 of the host
  int k = 0;
  std::vector<CertificateEntry> entries;
};

/// Raised by build_certificate when some size-k matching does not extend.
class NotExtendableError : public std::runtime_error {
 public:
  NotExtendableError(const std::string& what, std::optional<Matching> failing)
      : std::runtime_error(what), failing_(std::move(failing)) {}
  const std::optional<Matching>& failing() const { return failing_; }

 private:
  std::optional<Matching> failing_;
};

/// Lists every size-k matching with the completion chosen by the
/// deterministic maximum matching routine. Accepts 2k <= order; below
/// order/2 the extendability domain rules apply.
ExtendabilityCertificate build_certificate(const Graph& g, int k);

struct CertificateCheck {
  bool valid = false;
  std::string diagnostic;  // first violation, empty when valid
};

/// Independent check using only set and degree bookkeeping: hash match,
/// keys exactly the size-k matchings, each perfect matching valid and
/// containing its key.
CertificateCheck verify_certificate(const Graph& g, const ExtendabilityCertificate& c);

/// `certificate v1 <hash> k=<k>` then `key: <edges> pm: <edges>` per entry.
std::string format_certificate(const ExtendabilityCertificate& c);
ExtendabilityCertificate parse_certificate(std::string_view text);

/// One row of an appendix-style verification table: an edge, the other
/// edge of each listed pair, and perfect matchings covering those pairs.
struct AppendixRow {
  Edge edge;
  std::vector<Edge> paired;
  std::vector<Matching> perfect_matchings;
  int line = 0;
};

/// Tables list representatives only, so an import is always partial.
struct AppendixTable {
  std::vector<AppendixRow> rows;
  bool partial = true;
};

/// Three `|`-separated columns per line: edge, comma-separated paired
/// edges (a trailing '.' is allowed) and brace-delimited matchings. A row
/// with an empty first column continues the previous one. Blank lines and
/// lines starting with '#' are skipped.
AppendixTable import_appendix_table(std::string_view text);

struct PartialCertificate {
  ExtendabilityCertificate certificate;  // one entry per listed pair
  std::vector<Matching> uncovered;       // listed pairs no row matching contains
};

/// For each listed pair, the first matching of its row that contains both
/// edges. The hash is that of g.
PartialCertificate appendix_certificate(const Graph& g, const AppendixTable& table);

/// Checks each entry of a partial certificate on its own: key size, edges of
/// g, perfect matching containing the key. Coverage of all size-k
/// matchings is not required.
CertificateCheck verify_partial_certificate(const Graph& g, const ExtendabilityCertificate& c);

}  // namespace matchext
