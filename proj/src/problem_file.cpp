#include "affproj/problem_file.hpp"

#include "affproj/experiment.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace affproj {

std::string_view ProblemFile::kind_name() const noexcept {
  switch (payload.index()) {
    case 0: return "affine_hyperplane";
    case 1: return "two_hyperplanes";
    default: return "linear_system";
  }
}

ParseError::ParseError(std::size_t line, std::string field, const std::string& message)
    : std::runtime_error([&] {
        std::ostringstream os;
        if (line > 0) os << "line " << line << ": ";
        if (!field.empty()) os << "'" << field << "': ";
        os << message;
        return os.str();
      }()),
      line_(line),
      field_(std::move(field)) {}

namespace {

struct Entry {
  std::size_t line;
  std::vector<double> values;
};

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

double parse_number(std::string_view word, std::size_t line, const std::string& field) {
  if (!word.empty() && word.front() == '+') word.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, field, "not a number: '" + std::string(word) + "'");
  }
  if (!std::isfinite(value)) throw ParseError(line, field, "non-finite number");
  return value;
}

class Document {
 public:
  explicit Document(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      std::string_view line = text.substr(pos, end - pos);
      ++line_no;
      pos = end + 1;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      const auto words = split_words(line);
      if (words.empty()) {
        if (end == text.size()) break;
        continue;
      }
      const std::string key(words.front());
      if (key == "kind") {
        if (words.size() != 2) throw ParseError(line_no, key, "expected exactly one kind name");
        if (kind_) throw ParseError(line_no, key, "duplicate kind");
        kind_ = std::string(words[1]);
      } else {
        Entry entry{line_no, {}};
        for (std::size_t i = 1; i < words.size(); ++i)
          entry.values.push_back(parse_number(words[i], line_no, key));
        fields_[key].push_back(std::move(entry));
      }
      if (end == text.size()) break;
    }
    if (!kind_) throw ParseError(0, "kind", "missing kind declaration");
    const Entry& d = single("dim");
    if (d.values.size() != 1 || d.values[0] < 1 || d.values[0] != static_cast<int>(d.values[0])) {
      throw ParseError(d.line, "dim", "expected one positive integer");
    }
    dim_ = static_cast<Eigen::Index>(d.values[0]);
  }

  const std::string& kind() const { return *kind_; }
  Eigen::Index dim() const { return dim_; }

  const Entry& single(const std::string& key) const {
    const auto it = fields_.find(key);
    if (it == fields_.end()) throw ParseError(0, key, "missing field");
    if (it->second.size() != 1) throw ParseError(it->second[1].line, key, "field given more than once");
    return it->second.front();
  }

  std::vector<Entry> repeated(const std::string& key) const {
    const auto it = fields_.find(key);
    return it == fields_.end() ? std::vector<Entry>{} : it->second;
  }

  double scalar(const std::string& key) const {
    const Entry& e = single(key);
    if (e.values.size() != 1) throw ParseError(e.line, key, "expected one number");
    return e.values[0];
  }

  Vector vector_of(const Entry& e, const std::string& key, Eigen::Index n) const {
    if (static_cast<Eigen::Index>(e.values.size()) != n) {
      throw DimensionMismatch("line " + std::to_string(e.line) + ": '" + key + "'", n,
                              static_cast<Eigen::Index>(e.values.size()));
    }
    return Eigen::Map<const Vector>(e.values.data(), n);
  }

  Vector vector(const std::string& key) const { return vector_of(single(key), key, dim_); }

  void allow_only(std::initializer_list<const char*> keys) const {
    for (const auto& [key, entries] : fields_) {
      bool known = key == "dim";
      for (const char* k : keys) known = known || key == k;
      if (!known) throw ParseError(entries.front().line, key, "unknown field for kind " + *kind_);
    }
  }

 private:
  std::optional<std::string> kind_;
  std::map<std::string, std::vector<Entry>> fields_;
  Eigen::Index dim_ = 0;
};

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  const Document doc(text);
  const Eigen::Index n = doc.dim();
  if (doc.kind() == "affine_hyperplane") {
    doc.allow_only({"point", "span", "normal", "offset", "query"});
    AffineHyperplaneProblem p;
    p.point = doc.vector("point");
    for (const Entry& e : doc.repeated("span")) p.spans.push_back(doc.vector_of(e, "span", n));
    p.normal = doc.vector("normal");
    p.offset = doc.scalar("offset");
    p.query = doc.vector("query");
    return {std::move(p)};
  }
  if (doc.kind() == "two_hyperplanes") {
    doc.allow_only({"normal1", "offset1", "normal2", "offset2", "query"});
    TwoHyperplanesProblem p;
    p.normal1 = doc.vector("normal1");
    p.offset1 = doc.scalar("offset1");
    p.normal2 = doc.vector("normal2");
    p.offset2 = doc.scalar("offset2");
    p.query = doc.vector("query");
    return {std::move(p)};
  }
  if (doc.kind() == "linear_system") {
    doc.allow_only({"row", "rhs", "query"});
    const auto rows = doc.repeated("row");
    if (rows.empty()) throw ParseError(0, "row", "linear system needs at least one row");
    LinearSystemProblem p;
    p.m.resize(static_cast<Eigen::Index>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
      p.m.row(static_cast<Eigen::Index>(i)) = doc.vector_of(rows[i], "row", n).transpose();
    p.rhs = doc.vector_of(doc.single("rhs"), "rhs", p.m.rows());
    p.query = doc.vector("query");
    return {std::move(p)};
  }
  throw ParseError(0, "kind", "unknown kind '" + doc.kind() + "'");
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "", "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

std::string format_vector(const Vector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_real(v[i]);
  }
  return out;
}

namespace {

struct ProblemWriter {
  std::ostream& out;

  void operator()(const AffineHyperplaneProblem& p) const {
    out << "kind affine_hyperplane\ndim " << p.point.size() << '\n';
    out << "point " << format_vector(p.point) << '\n';
    for (const Vector& s : p.spans) out << "span " << format_vector(s) << '\n';
    out << "normal " << format_vector(p.normal) << '\n';
    out << "offset " << format_real(p.offset) << '\n';
    out << "query " << format_vector(p.query) << '\n';
  }
  void operator()(const TwoHyperplanesProblem& p) const {
    out << "kind two_hyperplanes\ndim " << p.normal1.size() << '\n';
    out << "normal1 " << format_vector(p.normal1) << '\n';
    out << "offset1 " << format_real(p.offset1) << '\n';
    out << "normal2 " << format_vector(p.normal2) << '\n';
    out << "offset2 " << format_real(p.offset2) << '\n';
    out << "query " << format_vector(p.query) << '\n';
  }
  void operator()(const LinearSystemProblem& p) const {
    out << "kind linear_system\ndim " << p.m.cols() << '\n';
    for (Eigen::Index i = 0; i < p.m.rows(); ++i)
      out << "row " << format_vector(p.m.row(i).transpose()) << '\n';
    out << "rhs " << format_vector(p.rhs) << '\n';
    out << "query " << format_vector(p.query) << '\n';
  }
};

}  // namespace

void write_problem(std::ostream& out, const ProblemFile& problem) {
  std::visit(ProblemWriter{out}, problem.payload);
}

ProblemFile random_problem(std::string_view kind, int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  auto rng = substream_engine(seed, 0, 0);
  std::normal_distribution<double> dist(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  auto draw = [&] {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = dist(rng);
    return v;
  };
  if (kind == "affine_hyperplane") {
    AffineHyperplaneProblem p;
    p.point = draw();
    const int spans = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
    for (int i = 0; i < spans; ++i) p.spans.push_back(draw());
    p.normal = draw();
    p.offset = dist(rng);
    p.query = draw();
    return {std::move(p)};
  }
  if (kind == "two_hyperplanes") {
    TwoHyperplanesProblem p{draw(), dist(rng), draw(), dist(rng), draw()};
    return {std::move(p)};
  }
  if (kind == "linear_system") {
    LinearSystemProblem p;
    const auto rows = static_cast<Eigen::Index>(1 + rng() % static_cast<std::uint64_t>(dim));
    p.m.resize(rows, n);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < n; ++j) p.m(i, j) = dist(rng);
    p.rhs = p.m * draw();
    p.query = draw();
    return {std::move(p)};
  }
  throw std::invalid_argument("unknown problem kind '" + std::string(kind) + "'");
}

}  // namespace affproj
