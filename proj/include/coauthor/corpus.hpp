#pragma once

// Bibliographic records and the author table they are interned into.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coauthor {

using AuthorId = std::uint32_t;

struct Publication {
  std::string id;
  int year = 0;
  std::string venue;
  std::vector<AuthorId> authors;  // byline order, no repeats

  std::size_t author_count() const noexcept { return authors.size(); }
};

struct AuthorMeta {
  std::optional<std::string> country;  // lower-case domain code ("us", "uk")
  std::optional<std::string> affiliation;
};

/// Canonical name <-> dense id. Ids are 0..size()-1.
class AuthorTable {
 public:
  AuthorId intern(const std::string& canonical_name);
  std::optional<AuthorId> find(std::string_view canonical_name) const;

  const std::string& name(AuthorId id) const { return names_.at(id); }
  const AuthorMeta& meta(AuthorId id) const { return meta_.at(id); }
  AuthorMeta& meta(AuthorId id) { return meta_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::vector<AuthorMeta> meta_;
  std::unordered_map<std::string, AuthorId> index_;
};

struct ParseReport {
  std::size_t records = 0;            // lines that produced a publication
  std::size_t rejected_records = 0;   // no usable author
  std::size_t duplicate_authors = 0;  // repeated names within one byline
  std::size_t empty_names = 0;        // author entries that normalized to ""
};

struct Corpus {
  std::vector<Publication> publications;  // sorted by id
  AuthorTable authors;                    // ids assigned in canonical-name order
  ParseReport report;
};

/// NFC composition, trimmed, inner whitespace runs collapsed to one space.
/// Case is preserved.
std::string normalize_name(std::string_view raw);

/// Normalized and case-folded; used for roster matching.
std::string fold_name(std::string_view raw);

/// Reads the JSON-lines bibliography. Ids and publication order are
/// canonicalized (authors by name, publications by id), so the result does
/// not depend on the order of the input lines.
/// Throws ParseError on malformed lines, bad fields or repeated ids.
Corpus parse_publications(std::istream& in);

struct AffiliationReport {
  std::size_t applied = 0;
  std::size_t unknown_authors = 0;  // names not present in the bibliography
};

/// Reads the JSON-lines affiliation file into the table's metadata.
AffiliationReport load_affiliations(std::istream& in, AuthorTable& table);

struct YearStats {
  std::size_t publications = 0;
  std::size_t authors = 0;
  std::size_t new_authors = 0;
  std::size_t international_authors = 0;  // known country other than "us"
  std::size_t unknown_country_authors = 0;
};

inline constexpr std::string_view kUnknownCountry = "unknown";

struct CorpusStats {
  std::size_t total_publications = 0;
  std::size_t total_authors = 0;
  double mean_authors_per_paper = 0.0;
  double median_authors_per_paper = 0.0;
  std::map<int, YearStats> per_year;
  std::map<std::size_t, std::size_t> papers_per_author;  // papers -> authors
  std::map<std::size_t, std::size_t> authors_per_paper;  // authors -> papers
  std::map<std::string, std::size_t> authors_per_country;  // includes kUnknownCountry
  std::vector<std::size_t> publication_counts;             // indexed by AuthorId
};

/// Throws DomainError on an empty corpus.
CorpusStats corpus_stats(const std::vector<Publication>& pubs, const AuthorTable& table);

}  // namespace coauthor
