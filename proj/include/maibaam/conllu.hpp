#ifndef MAIBAAM_CONLLU_HPP
#define MAIBAAM_CONLLU_HPP

// CoNLL-U document model, reader and writer.
//
// The reader keeps enough layout information (comment placement, extra blank
// lines, empty-node lines, byte-order mark, missing final newline) that
// serialize_document(parse_document(x)) == x for every input that parses.

#include <array>
#include <cstddef>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maibaam/diagnostic.hpp"
#include "maibaam/text.hpp"

namespace maibaam {

struct MiscAttr {
  std::string key;
  std::optional<std::string> value;  // nullopt for a bare item without '='

  friend bool operator==(const MiscAttr&, const MiscAttr&) = default;
};

/// Ordered MISC (or MWT misc) attribute list. Order and spelling are kept as
/// read; "_" is the empty list.
class Misc {
 public:
  Misc() = default;

  static Misc parse(std::string_view column) {
    Misc m;
    if (column == "_") return m;
    for (auto item : text::split(column, '|')) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos)
        m.items_.push_back({std::string(item), std::nullopt});
      else
        m.items_.push_back({std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))});
    }
    return m;
  }

  std::string to_string() const {
    if (items_.empty()) return "_";
    std::string out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out += '|';
      out += items_[i].key;
      if (items_[i].value) out += '=' + *items_[i].value;
    }
    return out;
  }

  std::optional<std::string_view> get(std::string_view key) const {
    for (const auto& a : items_)
      if (a.key == key) return a.value ? std::string_view(*a.value) : std::string_view();
    return std::nullopt;
  }

  bool has(std::string_view key, std::string_view value) const {
    auto v = get(key);
    return v && *v == value;
  }

  /// Replaces the first attribute named `key`, or appends one.
  void set(std::string_view key, std::string_view value) {
    for (auto& a : items_)
      if (a.key == key) {
        a.value = std::string(value);
        return;
      }
    items_.push_back({std::string(key), std::string(value)});
  }

  void erase(std::string_view key) {
    std::erase_if(items_, [&](const MiscAttr& a) { return a.key == key; });
  }

  const std::vector<MiscAttr>& items() const { return items_; }
  bool empty() const { return items_.empty(); }

  friend bool operator==(const Misc&, const Misc&) = default;

 private:
  std::vector<MiscAttr> items_;
};

struct Token {
  int id = 1;
  std::string form;
  std::string lemma_col = "_";
  std::string upos = "_";
  std::string xpos_col = "_";
  std::string feats_col = "_";
  int head = 0;
  std::string deprel = "_";
  std::string deps_col = "_";
  Misc misc;
  int line = 0;  // source line, 0 when constructed

  bool space_after() const { return !misc.has("SpaceAfter", "No"); }
  std::optional<std::string_view> german_lemma() const { return misc.get("GermanLemma"); }

  friend bool operator==(const Token&, const Token&) = default;
};

struct MwtSpan {
  int first_id = 1;
  int last_id = 2;
  std::string surface_form;
  // Columns LEMMA..DEPS of the range line, normally all "_".
  std::array<std::string, 7> middle{"_", "_", "_", "_", "_", "_", "_"};
  Misc misc;
  int line = 0;

  bool covers(int id) const { return id >= first_id && id <= last_id; }

  friend bool operator==(const MwtSpan&, const MwtSpan&) = default;
};

struct CommentLine {
  std::string raw;  // full line including '#'
  int line = 0;

  /// "# key = value" metadata; nullopt for free-form comments.
  std::optional<std::pair<std::string, std::string>> metadata() const {
    std::string_view body(raw);
    if (body.empty() || body.front() != '#') return std::nullopt;
    body.remove_prefix(1);
    auto eq = body.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    auto key = text::trim(body.substr(0, eq));
    if (key.empty()) return std::nullopt;
    for (char c : key)
      if (text::is_space(c)) return std::nullopt;
    return std::pair{std::string(key), std::string(text::trim(body.substr(eq + 1)))};
  }

  friend bool operator==(const CommentLine&, const CommentLine&) = default;
};

/// An empty-node (decimal ID) line, kept verbatim.
struct RawLine {
  std::string text;
  int line = 0;
  friend bool operator==(const RawLine&, const RawLine&) = default;
};

enum class LineKind { comment, mwt, token, empty_node };

struct LayoutEntry {
  LineKind kind;
  std::size_t index;
  friend bool operator==(const LayoutEntry&, const LayoutEntry&) = default;
};

struct Sentence {
  std::vector<CommentLine> comments;
  std::vector<Token> tokens;
  std::vector<MwtSpan> mwt_spans;
  std::vector<RawLine> empty_nodes;
  // Source line order; empty for constructed sentences (canonical order).
  std::vector<LayoutEntry> layout;
  std::string file;
  int first_line = 0;

  std::optional<std::string> meta(std::string_view key) const {
    for (const auto& c : comments)
      if (auto kv = c.metadata(); kv && kv->first == key) return kv->second;
    return std::nullopt;
  }

  std::vector<std::pair<std::string, std::string>> metadata() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : comments)
      if (auto kv = c.metadata()) out.push_back(std::move(*kv));
    return out;
  }

  void set_meta(std::string_view key, std::string_view value) {
    std::string raw = "# " + std::string(key) + " = " + std::string(value);
    for (auto& c : comments)
      if (auto kv = c.metadata(); kv && kv->first == key) {
        c.raw = raw;
        return;
      }
    comments.push_back({raw, 0});
    if (!layout.empty()) {
      std::size_t pos = 0;
      while (pos < layout.size() && layout[pos].kind == LineKind::comment) ++pos;
      layout.insert(layout.begin() + static_cast<std::ptrdiff_t>(pos),
                    {LineKind::comment, comments.size() - 1});
    }
  }

  void erase_meta(std::string_view key) {
    for (std::size_t i = 0; i < comments.size(); ++i) {
      auto kv = comments[i].metadata();
      if (!kv || kv->first != key) continue;
      comments.erase(comments.begin() + static_cast<std::ptrdiff_t>(i));
      if (!layout.empty()) {
        std::erase_if(layout, [&](const LayoutEntry& e) {
          return e.kind == LineKind::comment && e.index == i;
        });
        for (auto& e : layout)
          if (e.kind == LineKind::comment && e.index > i) --e.index;
      }
      return;
    }
  }

  std::string sentence_id() const { return meta("sent_id").value_or(""); }

  const MwtSpan* span_starting_at(int id) const {
    for (const auto& s : mwt_spans)
      if (s.first_id == id) return &s;
    return nullptr;
  }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct DocItem {
  bool is_sentence = true;
  std::size_t index = 0;  // into Document::sentences when is_sentence
  std::string raw;        // verbatim line otherwise (blank or stray comment)
  friend bool operator==(const DocItem&, const DocItem&) = default;
};

struct Document {
  std::string file;
  std::vector<Sentence> sentences;
  std::vector<DocItem> items;  // empty for constructed documents
  bool byte_order_mark = false;
  bool final_newline = true;
  // Warnings raised while reading (e.g. CORE.BOM).
  std::vector<Diagnostic> notices;

  friend bool operator==(const Document&, const Document&) = default;
};

enum class ParseErrorCode { wrong_column_count, bad_id, bad_head, unterminated_sentence };

inline std::string_view to_string(ParseErrorCode c) {
  switch (c) {
    case ParseErrorCode::wrong_column_count: return "WRONG_COLUMN_COUNT";
    case ParseErrorCode::bad_id: return "BAD_ID";
    case ParseErrorCode::bad_head: return "BAD_HEAD";
    case ParseErrorCode::unterminated_sentence: return "UNTERMINATED_SENTENCE";
  }
  return "PARSE_ERROR";
}

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, std::string file, int line, const std::string& detail)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " +
                           std::string(to_string(code)) + " " + detail),
        code_(code),
        file_(std::move(file)),
        line_(line) {}

  ParseErrorCode code() const { return code_; }
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  ParseErrorCode code_;
  std::string file_;
  int line_;
};

namespace detail {

inline bool canonical_number(std::string_view s) {
  return text::is_digits(s) && (s.size() == 1 || s.front() != '0');
}

inline int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

class Reader {
 public:
  explicit Reader(std::string file) : doc_{} { doc_.file = std::move(file); }

  Document run(std::string_view input) {
    if (input.starts_with("\xEF\xBB\xBF")) {
      input.remove_prefix(3);
      doc_.byte_order_mark = true;
      doc_.notices.push_back({"CORE.BOM", Severity::warning, doc_.file, 1, "", std::nullopt,
                              "byte-order mark stripped", std::nullopt});
    }
    auto lines = text::split(input, '\n');
    if (!lines.empty() && lines.back().empty()) {
      lines.pop_back();
    } else if (!input.empty()) {
      doc_.final_newline = false;
    }
    int lineno = 0;
    for (auto line : lines) {
      ++lineno;
      if (line.empty()) {
        blank(lineno);
      } else if (line.front() == '#') {
        comment(line, lineno);
      } else {
        word_line(line, lineno);
      }
    }
    if (has_body())
      throw ParseError(ParseErrorCode::unterminated_sentence, doc_.file, lineno,
                       "end of input before the blank line closing the sentence");
    flush_comments_as_raw();
    return std::move(doc_);
  }

 private:
  bool has_body() const {
    return !cur_.tokens.empty() || !cur_.mwt_spans.empty() || !cur_.empty_nodes.empty();
  }

  void flush_comments_as_raw() {
    for (auto& c : cur_.comments) doc_.items.push_back({false, 0, std::move(c.raw)});
    cur_ = Sentence{};
  }

  void blank(int lineno) {
    if (has_body()) {
      finish(lineno);
      return;
    }
    flush_comments_as_raw();
    doc_.items.push_back({false, 0, ""});
  }

  void comment(std::string_view line, int lineno) {
    if (cur_.comments.empty() && !has_body()) cur_.first_line = lineno;
    cur_.comments.push_back({std::string(line), lineno});
    cur_.layout.push_back({LineKind::comment, cur_.comments.size() - 1});
  }

  void word_line(std::string_view line, int lineno) {
    if (cur_.comments.empty() && !has_body()) cur_.first_line = lineno;
    auto cols = text::split(line, '\t');
    if (cols.size() != 10)
      throw ParseError(ParseErrorCode::wrong_column_count, doc_.file, lineno,
                       "expected 10 tab-separated fields, found " + std::to_string(cols.size()));
    auto id = cols[0];
    int next = static_cast<int>(cur_.tokens.size()) + 1;

    if (auto dash = id.find('-'); dash != std::string_view::npos) {
      auto a = id.substr(0, dash), b = id.substr(dash + 1);
      if (!canonical_number(a) || !canonical_number(b) || to_int(a) > to_int(b) || to_int(a) == 0)
        throw ParseError(ParseErrorCode::bad_id, doc_.file, lineno,
                         "malformed range '" + std::string(id) + "'");
      if (to_int(a) != next)
        throw ParseError(ParseErrorCode::bad_id, doc_.file, lineno,
                         "range '" + std::string(id) + "' must start at word " + std::to_string(next));
      MwtSpan span;
      span.first_id = to_int(a);
      span.last_id = to_int(b);
      span.surface_form = std::string(cols[1]);
      for (std::size_t i = 0; i < 7; ++i) span.middle[i] = std::string(cols[2 + i]);
      span.misc = Misc::parse(cols[9]);
      span.line = lineno;
      cur_.mwt_spans.push_back(std::move(span));
      cur_.layout.push_back({LineKind::mwt, cur_.mwt_spans.size() - 1});
      return;
    }

    if (auto dot = id.find('.'); dot != std::string_view::npos) {
      if (!canonical_number(id.substr(0, dot)) || !text::is_digits(id.substr(dot + 1)))
        throw ParseError(ParseErrorCode::bad_id, doc_.file, lineno,
                         "malformed empty-node id '" + std::string(id) + "'");
      cur_.empty_nodes.push_back({std::string(line), lineno});
      cur_.layout.push_back({LineKind::empty_node, cur_.empty_nodes.size() - 1});
      return;
    }

    if (!canonical_number(id) || to_int(id) != next)
      throw ParseError(ParseErrorCode::bad_id, doc_.file, lineno,
                       "expected word id " + std::to_string(next) + ", found '" +
                           std::string(id) + "'");
    if (!canonical_number(cols[6]))
      throw ParseError(ParseErrorCode::bad_head, doc_.file, lineno,
                       "head '" + std::string(cols[6]) + "' is not a non-negative integer");
    Token t;
    t.id = next;
    t.form = std::string(cols[1]);
    t.lemma_col = std::string(cols[2]);
    t.upos = std::string(cols[3]);
    t.xpos_col = std::string(cols[4]);
    t.feats_col = std::string(cols[5]);
    t.head = to_int(cols[6]);
    t.deprel = std::string(cols[7]);
    t.deps_col = std::string(cols[8]);
    t.misc = Misc::parse(cols[9]);
    t.line = lineno;
    cur_.tokens.push_back(std::move(t));
    cur_.layout.push_back({LineKind::token, cur_.tokens.size() - 1});
  }

  void finish(int lineno) {
    int n = static_cast<int>(cur_.tokens.size());
    for (const auto& s : cur_.mwt_spans)
      if (s.last_id > n)
        throw ParseError(ParseErrorCode::bad_id, doc_.file, s.line,
                         "range " + std::to_string(s.first_id) + "-" + std::to_string(s.last_id) +
                             " exceeds the sentence's " + std::to_string(n) + " words");
    if (n == 0)
      throw ParseError(ParseErrorCode::bad_id, doc_.file, lineno - 1, "sentence has no words");
    cur_.file = doc_.file;
    doc_.sentences.push_back(std::move(cur_));
    doc_.items.push_back({true, doc_.sentences.size() - 1, {}});
    cur_ = Sentence{};
  }

  Document doc_;
  Sentence cur_;
};

inline void write_token(std::string& out, const Token& t) {
  out += std::to_string(t.id);
  for (const std::string* f : {&t.form, &t.lemma_col, &t.upos, &t.xpos_col, &t.feats_col}) {
    out += '\t';
    out += *f;
  }
  out += '\t' + std::to_string(t.head) + '\t' + t.deprel + '\t' + t.deps_col + '\t' +
         t.misc.to_string() + '\n';
}

inline void write_span(std::string& out, const MwtSpan& s) {
  out += std::to_string(s.first_id) + '-' + std::to_string(s.last_id) + '\t' + s.surface_form;
  for (const auto& m : s.middle) out += '\t' + m;
  out += '\t' + s.misc.to_string() + '\n';
}

inline void write_sentence(std::string& out, const Sentence& s) {
  if (!s.layout.empty()) {
    for (const auto& e : s.layout) {
      switch (e.kind) {
        case LineKind::comment: out += s.comments[e.index].raw + '\n'; break;
        case LineKind::mwt: write_span(out, s.mwt_spans[e.index]); break;
        case LineKind::token: write_token(out, s.tokens[e.index]); break;
        case LineKind::empty_node: out += s.empty_nodes[e.index].text + '\n'; break;
      }
    }
  } else {
    for (const auto& c : s.comments) out += c.raw + '\n';
    for (const auto& t : s.tokens) {
      for (const auto& span : s.mwt_spans)
        if (span.first_id == t.id) write_span(out, span);
      write_token(out, t);
    }
  }
  out += '\n';
}

}  // namespace detail

/// Reads a whole CoNLL-U document. Throws ParseError on the first malformed
/// line.
inline Document parse_document(std::string_view input, std::string file_name) {
  return detail::Reader(std::move(file_name)).run(input);
}

inline Document parse_document(std::istream& in, std::string file_name) {
  std::string buf{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_document(std::string_view(buf), std::move(file_name));
}

inline std::string serialize_document(const Document& doc) {
  std::string out;
  if (doc.byte_order_mark) out += "\xEF\xBB\xBF";
  if (doc.items.empty()) {
    for (const auto& s : doc.sentences) detail::write_sentence(out, s);
  } else {
    for (const auto& item : doc.items) {
      if (item.is_sentence)
        detail::write_sentence(out, doc.sentences[item.index]);
      else
        out += item.raw + '\n';
    }
  }
  if (!doc.final_newline && !out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

inline std::string serialize_sentence(const Sentence& s) {
  std::string out;
  detail::write_sentence(out, s);
  return out;
}

}  // namespace maibaam

#endif  // MAIBAAM_CONLLU_HPP
