#include "coauthor/corpus.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <cctype>
#include <istream>
#include <json.hpp>
#include <set>
#include <unordered_set>

#include "coauthor/error.hpp"

namespace coauthor {

AuthorId AuthorTable::intern(const std::string& canonical_name) {
  auto [it, inserted] = index_.try_emplace(canonical_name, static_cast<AuthorId>(names_.size()));
  if (inserted) {
    names_.push_back(canonical_name);
    meta_.emplace_back();
  }
  return it->second;
}

std::optional<AuthorId> AuthorTable::find(std::string_view canonical_name) const {
  auto it = index_.find(std::string(canonical_name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

icu::UnicodeString normalized_unicode(std::string_view raw) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  icu::UnicodeString composed;
  if (U_SUCCESS(status)) composed = nfc->normalize(text, status);
  if (U_FAILURE(status)) composed = text;

  icu::UnicodeString out;
  bool pending_space = false;
  for (int32_t i = 0; i < composed.length();) {
    UChar32 c = composed.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      pending_space = !out.isEmpty();
      continue;
    }
    if (pending_space) out.append(static_cast<UChar>(0x20));
    pending_space = false;
    out.append(c);
  }
  return out;
}

std::string to_utf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

struct RawRecord {
  std::size_t line;
  std::string id;
  int year;
  std::string venue;
  std::vector<std::string> authors;
};

RawRecord read_record(const std::string& text, std::size_t line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(line, "record is not a JSON object");

  RawRecord rec{line, {}, 0, {}, {}};
  auto id = j.find("id");
  if (id == j.end() || !id->is_string()) throw ParseError(line, "missing string field \"id\"");
  rec.id = id->get<std::string>();

  auto year = j.find("year");
  if (year == j.end() || !year->is_number_integer())
    throw ParseError(line, "missing integer field \"year\"");
  const auto y = year->get<long long>();
  if (y <= 0 || y > 1000000) throw ParseError(line, "year must be a positive integer");
  rec.year = static_cast<int>(y);

  if (auto venue = j.find("venue"); venue != j.end()) {
    if (!venue->is_string()) throw ParseError(line, "field \"venue\" must be a string");
    rec.venue = venue->get<std::string>();
  }

  auto authors = j.find("authors");
  if (authors == j.end() || !authors->is_array())
    throw ParseError(line, "missing array field \"authors\"");
  for (const auto& a : *authors) {
    if (!a.is_string()) throw ParseError(line, "author entries must be strings");
    rec.authors.push_back(a.get<std::string>());
  }
  return rec;
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

std::string normalize_name(std::string_view raw) { return to_utf8(normalized_unicode(raw)); }

std::string fold_name(std::string_view raw) {
  icu::UnicodeString s = normalized_unicode(raw);
  s.foldCase();
  // Folding can decompose (e.g. U+0130), so recompose.
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_SUCCESS(status)) {
    icu::UnicodeString composed = nfc->normalize(s, status);
    if (U_SUCCESS(status)) return to_utf8(composed);
  }
  return to_utf8(s);
}

Corpus parse_publications(std::istream& in) {
  Corpus corpus;
  std::vector<RawRecord> records;
  std::unordered_map<std::string, std::size_t> seen_ids;

  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (is_blank(text)) continue;

    RawRecord rec = read_record(text, line);
    if (auto [it, fresh] = seen_ids.try_emplace(rec.id, line); !fresh) {
      throw ParseError(line, "duplicate publication id \"" + rec.id + "\" (first seen on line " +
                                 std::to_string(it->second) + ")");
    }

    std::vector<std::string> names;
    std::unordered_set<std::string> in_byline;
    for (const auto& raw : rec.authors) {
      std::string name = normalize_name(raw);
      if (name.empty()) {
        ++corpus.report.empty_names;
        continue;
      }
      if (!in_byline.insert(name).second) {
        ++corpus.report.duplicate_authors;
        continue;
      }
      names.push_back(std::move(name));
    }
    if (names.empty()) {
      ++corpus.report.rejected_records;
      continue;
    }
    rec.authors = std::move(names);
    records.push_back(std::move(rec));
  }

  std::set<std::string> all_names;
  for (const auto& rec : records) all_names.insert(rec.authors.begin(), rec.authors.end());
  for (const auto& name : all_names) corpus.authors.intern(name);

  std::sort(records.begin(), records.end(),
            [](const RawRecord& a, const RawRecord& b) { return a.id < b.id; });
  corpus.publications.reserve(records.size());
  for (auto& rec : records) {
    Publication pub{std::move(rec.id), rec.year, std::move(rec.venue), {}};
    pub.authors.reserve(rec.authors.size());
    for (const auto& name : rec.authors) pub.authors.push_back(*corpus.authors.find(name));
    corpus.publications.push_back(std::move(pub));
  }
  corpus.report.records = corpus.publications.size();
  return corpus;
}

AffiliationReport load_affiliations(std::istream& in, AuthorTable& table) {
  AffiliationReport report;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (is_blank(text)) continue;

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(line, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(line, "record is not a JSON object");
    auto author = j.find("author");
    if (author == j.end() || !author->is_string())
      throw ParseError(line, "missing string field \"author\"");

    auto id = table.find(normalize_name(author->get<std::string>()));
    if (!id) {
      ++report.unknown_authors;
      continue;
    }
    AuthorMeta& meta = table.meta(*id);
    if (auto country = j.find("country"); country != j.end() && !country->is_null()) {
      if (!country->is_string()) throw ParseError(line, "field \"country\" must be a string");
      std::string code = normalize_name(country->get<std::string>());
      if (!code.empty() && code.front() == '.') code.erase(0, 1);
      std::transform(code.begin(), code.end(), code.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      if (!code.empty()) meta.country = std::move(code);
    }
    if (auto aff = j.find("affiliation"); aff != j.end() && !aff->is_null()) {
      if (!aff->is_string()) throw ParseError(line, "field \"affiliation\" must be a string");
      meta.affiliation = aff->get<std::string>();
    }
    ++report.applied;
  }
  return report;
}

CorpusStats corpus_stats(const std::vector<Publication>& pubs, const AuthorTable& table) {
  if (pubs.empty()) throw DomainError("corpus statistics need at least one publication");

  CorpusStats s;
  s.total_publications = pubs.size();
  s.publication_counts.assign(table.size(), 0);

  std::vector<int> first_year(table.size(), 0);
  std::map<int, std::set<AuthorId>> active;
  std::vector<std::size_t> sizes;
  sizes.reserve(pubs.size());
  std::size_t byline_total = 0;

  for (const auto& pub : pubs) {
    const std::size_t f = pub.author_count();
    sizes.push_back(f);
    byline_total += f;
    ++s.authors_per_paper[f];
    ++s.per_year[pub.year].publications;
    auto& year_authors = active[pub.year];
    for (AuthorId a : pub.authors) {
      ++s.publication_counts.at(a);
      year_authors.insert(a);
      if (first_year[a] == 0 || pub.year < first_year[a]) first_year[a] = pub.year;
    }
  }

  for (AuthorId a = 0; a < table.size(); ++a) {
    if (s.publication_counts[a] == 0) continue;
    ++s.total_authors;
    ++s.papers_per_author[s.publication_counts[a]];
    ++s.per_year[first_year[a]].new_authors;
    const auto& country = table.meta(a).country;
    ++s.authors_per_country[country ? *country : std::string(kUnknownCountry)];
  }

  for (const auto& [year, authors] : active) {
    YearStats& ys = s.per_year[year];
    ys.authors = authors.size();
    for (AuthorId a : authors) {
      const auto& country = table.meta(a).country;
      if (!country) {
        ++ys.unknown_country_authors;
      } else if (*country != "us") {
        ++ys.international_authors;
      }
    }
  }

  s.mean_authors_per_paper = static_cast<double>(byline_total) / static_cast<double>(pubs.size());
  std::sort(sizes.begin(), sizes.end());
  const std::size_t mid = sizes.size() / 2;
  s.median_authors_per_paper = sizes.size() % 2 == 1
                                   ? static_cast<double>(sizes[mid])
                                   : 0.5 * static_cast<double>(sizes[mid - 1] + sizes[mid]);
  return s;
}

}  // namespace coauthor
