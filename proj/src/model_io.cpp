#include "soficlab/model_io.hpp"

#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "soficlab/errors.hpp"

namespace soficlab {

using nlohmann::json;

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

int parse_int(const std::string& s, const char* what) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'");
  }
  if (pos != s.size()) throw ParseError(std::string("bad ") + what + " '" + s + "'");
  return static_cast<int>(v);
}

std::vector<int> parse_images(const std::vector<std::string>& toks, size_t from, int n) {
  if (static_cast<int>(toks.size() - from) != n)
    throw ParseError("expected " + std::to_string(n) + " images, got " +
                     std::to_string(toks.size() - from));
  std::vector<int> im;
  im.reserve(n);
  for (size_t i = from; i < toks.size(); ++i) im.push_back(parse_int(toks[i], "image"));
  return im;
}

}  // namespace

ModelFile parse_model(std::istream& in) {
  ModelFile out;
  int n = -1;
  std::vector<std::string> gen_names;
  std::vector<Permutation> gen_images;
  std::vector<std::pair<std::string, std::vector<int>>> tables;
  std::vector<std::string> normals;

  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "n") {
      if (toks.size() != 2) throw ParseError("model: 'n' line needs one value");
      n = parse_int(toks[1], "size");
    } else if (toks[0] == "gen") {
      if (n < 1) throw ParseError("model: 'gen' before 'n'");
      if (toks.size() < 2) throw ParseError("model: 'gen' needs a name");
      gen_names.push_back(toks[1]);
      gen_images.emplace_back(parse_images(toks, 2, n));
    } else if (toks[0] == "table") {
      if (n < 1) throw ParseError("model: 'table' before 'n'");
      if (toks.size() < 2) throw ParseError("model: 'table' needs a word");
      tables.emplace_back(toks[1], parse_images(toks, 2, n));
    } else if (toks[0] == "normal") {
      if (toks.size() != 2) throw ParseError("model: 'normal' needs one word");
      normals.push_back(toks[1]);
    } else {
      throw ParseError("model: unknown directive '" + toks[0] + "'");
    }
  }
  if (n < 1) throw ParseError("model: missing 'n' line");
  if (gen_names.empty()) throw ParseError("model: no generators");

  out.model = make_model(n, MarkedGroup(gen_names), std::move(gen_images));
  for (auto& [word_text, images] : tables) {
    Word w = Word::parse(word_text, out.model.group);
    out.model.table.emplace(w.canonical(out.model.group), Permutation(std::move(images)));
  }
  for (const std::string& word_text : normals)
    out.nspec.generators.push_back(Word::parse(word_text, out.model.group));
  return out;
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file '" + path + "'");
  return parse_model(in);
}

std::string serialize_model(const ActionModel& model, const NormalSubgroupSpec& nspec) {
  std::ostringstream out;
  out << "n " << model.n << "\n";
  auto emit = [&](const std::string& kind, const std::string& name, const Permutation& p) {
    out << kind << " " << name;
    for (int x = 0; x < p.size(); ++x) out << " " << p(x);
    out << "\n";
  };
  for (int i = 0; i < model.group.size(); ++i)
    emit("gen", model.group.names[i], model.gen_images[i]);
  for (const auto& [word_text, p] : model.table) emit("table", word_text, p);
  for (const Word& w : nspec.generators) out << "normal " << w.text(model.group) << "\n";
  return out.str();
}

void save_model(const std::string& path, const ActionModel& model,
                const NormalSubgroupSpec& nspec) {
  write_file(path, serialize_model(model, nspec));
}

GroupTable parse_group_table(std::istream& in) {
  std::string line;
  int order = -1;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "order") {
      if (toks.size() != 2) throw ParseError("group table: 'order' needs one value");
      order = parse_int(toks[1], "order");
    } else {
      if (order < 1) throw ParseError("group table: rows before 'order'");
      std::vector<int> row;
      for (const std::string& t : toks) row.push_back(parse_int(t, "entry"));
      if (static_cast<int>(row.size()) != order)
        throw ParseError("group table: row length != order");
      rows.push_back(std::move(row));
    }
  }
  if (order < 1) throw ParseError("group table: missing 'order'");
  if (static_cast<int>(rows.size()) != order) throw ParseError("group table: wrong row count");
  return GroupTable::from_rows(std::move(rows));
}

GroupTable load_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group table '" + path + "'");
  return parse_group_table(in);
}

std::string serialize_group_table(const GroupTable& table) {
  std::ostringstream out;
  out << "order " << table.order << "\n";
  for (const auto& row : table.mul) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << "\n";
  }
  return out.str();
}

Partition parse_partition(std::istream& in) {
  std::string line;
  int d = -1;
  Partition p;
  while (std::getline(in, line)) {
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "blocks") {
      if (toks.size() != 2) throw ParseError("partition: 'blocks' needs one value");
      d = parse_int(toks[1], "block count");
    } else if (toks[0] == "block") {
      if (d < 1) throw ParseError("partition: 'block' before 'blocks'");
      std::vector<int> block;
      for (size_t i = 1; i < toks.size(); ++i) block.push_back(parse_int(toks[i], "index"));
      p.blocks.push_back(std::move(block));
    } else {
      throw ParseError("partition: unknown directive '" + toks[0] + "'");
    }
  }
  if (d < 1) throw ParseError("partition: missing 'blocks'");
  if (static_cast<int>(p.blocks.size()) != d)
    throw ParseError("partition: wrong number of 'block' lines");
  return p;
}

Partition load_partition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open partition file '" + path + "'");
  return parse_partition(in);
}

std::string serialize_partition(const Partition& partition) {
  std::ostringstream out;
  out << "blocks " << partition.count() << "\n";
  for (const auto& block : partition.blocks) {
    out << "block";
    for (int v : block) out << " " << v;
    out << "\n";
  }
  return out.str();
}

MeasuredAlmostAction parse_measured_action(const std::string& json_text) {
  json j = json::parse(json_text);
  MeasuredAlmostAction a;
  std::vector<Rational> w;
  for (const auto& s : j.at("mu")) w.push_back(Rational::parse(s.get<std::string>()));
  a.mu = ProbMeasure(std::move(w));
  for (const auto& s : j.at("window")) a.symbols.push_back(s.get<std::string>());
  for (auto it = j.at("symbols").begin(); it != j.at("symbols").end(); ++it) {
    std::vector<int> im = it.value().get<std::vector<int>>();
    a.perms.emplace(it.key(), Permutation(std::move(im)));
  }
  if (j.contains("products"))
    for (const auto& t : j.at("products"))
      a.products.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(),
                            t.at(2).get<std::string>()});
  a.validate();
  return a;
}

MeasuredAlmostAction load_measured_action(const std::string& path) {
  return parse_measured_action(read_file(path));
}

std::string serialize_measured_action(const MeasuredAlmostAction& action) {
  json j;
  j["schema"] = 1;
  j["n"] = action.mu.size();
  std::vector<std::string> mu;
  for (const Rational& r : action.mu.weights) mu.push_back(r.str());
  j["mu"] = mu;
  j["window"] = action.symbols;
  json syms = json::object();
  for (const auto& [name, p] : action.perms) syms[name] = p.images();
  j["symbols"] = syms;
  json prods = json::array();
  for (const auto& t : action.products) prods.push_back({t[0], t[1], t[2]});
  j["products"] = prods;
  return j.dump(2) + "\n";
}

UnitaryRep parse_rep(std::istream& in) {
  std::string line;
  int dim = -1;
  std::vector<std::string> names;
  std::vector<Eigen::MatrixXcd> images;
  int pending_rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "dim") {
      if (toks.size() != 2) throw ParseError("rep: 'dim' needs one value");
      dim = parse_int(toks[1], "dimension");
    } else if (toks[0] == "gen") {
      if (dim < 0) throw ParseError("rep: 'gen' before 'dim'");
      if (pending_rows != 0) throw ParseError("rep: previous matrix incomplete");
      if (toks.size() != 2) throw ParseError("rep: 'gen' needs a name");
      names.push_back(toks[1]);
      images.emplace_back(Eigen::MatrixXcd::Zero(dim, dim));
      pending_rows = dim;
    } else {
      if (pending_rows == 0) throw ParseError("rep: matrix row outside a 'gen' block");
      if (static_cast<int>(toks.size()) != 2 * dim)
        throw ParseError("rep: row needs " + std::to_string(2 * dim) + " decimals");
      const int row = dim - pending_rows;
      for (int c = 0; c < dim; ++c) {
        double re = 0, im = 0;
        try {
          re = std::stod(toks[2 * c]);
          im = std::stod(toks[2 * c + 1]);
        } catch (const std::exception&) {
          throw ParseError("rep: bad decimal in matrix row");
        }
        images.back()(row, c) = std::complex<double>(re, im);
      }
      --pending_rows;
    }
  }
  if (dim < 0) throw ParseError("rep: missing 'dim'");
  if (pending_rows != 0) throw ParseError("rep: last matrix incomplete");
  if (names.empty()) throw ParseError("rep: no generators");
  return make_rep(MarkedGroup(std::move(names)), std::move(images));
}

UnitaryRep load_rep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open rep file '" + path + "'");
  return parse_rep(in);
}

std::string serialize_rep(const UnitaryRep& rep) {
  std::ostringstream out;
  out << "dim " << rep.dim << "\n";
  out << std::setprecision(17);
  for (int i = 0; i < rep.group.size(); ++i) {
    out << "gen " << rep.group.names[i] << "\n";
    for (int r = 0; r < rep.dim; ++r) {
      for (int c = 0; c < rep.dim; ++c) {
        if (c) out << " ";
        out << rep.images[i](r, c).real() << " " << rep.images[i](r, c).imag();
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file '" + path + "'");
  out << content;
}

}  // namespace soficlab
