#include "symstab/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace symstab {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error(path + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
  if (!j.is_object()) throw input_error(path + ": document must be an object");
  return j;
}

const json& field(const json& j, const std::string& path,
                  const std::string& name) {
  auto it = j.find(name);
  if (it == j.end())
    throw input_error(path + ": missing field '" + name + "'");
  return *it;
}

std::vector<Int> int_list(const json& v, const std::string& path,
                          const std::string& name) {
  if (!v.is_array())
    throw input_error(path + ": field '" + name + "' must be a list");
  std::vector<Int> out;
  for (const auto& e : v) {
    if (e.is_number_integer())
      out.push_back(Int(e.get<std::int64_t>()));
    else if (e.is_string())
      out.push_back(Int(e.get<std::string>()));
    else
      throw input_error(path + ": field '" + name +
                        "' must contain integers");
  }
  return out;
}

std::string torsion_join(const std::vector<Int>& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ";";
    os << t[i];
  }
  return os.str();
}

}  // namespace

ComplexDocument load_complex(const std::string& path) {
  const json j = parse_file(path);
  ComplexDocument doc;
  const json& jn = field(j, path, "name");
  if (!jn.is_string())
    throw input_error(path + ": field 'name' must be a string");
  doc.name = jn.get<std::string>();

  const json& jb = field(j, path, "basepoint");
  if (!jb.is_number_integer())
    throw input_error(path + ": field 'basepoint' must be a vertex index");
  const int basepoint = jb.get<int>();

  const json& jt = field(j, path, "top_simplices");
  if (!jt.is_array())
    throw input_error(path + ": field 'top_simplices' must be a list");
  std::vector<std::vector<int>> tops;
  for (std::size_t i = 0; i < jt.size(); ++i) {
    const json& s = jt[i];
    if (!s.is_array() || s.empty())
      throw input_error(path + ": top_simplices[" + std::to_string(i) +
                        "] must be a nonempty vertex list");
    std::vector<int> verts;
    for (const auto& v : s) {
      if (!v.is_number_integer())
        throw input_error(path + ": top_simplices[" + std::to_string(i) +
                          "] must contain vertex indices");
      verts.push_back(v.get<int>());
    }
    tops.push_back(std::move(verts));
  }
  try {
    doc.set = complex_model(tops, basepoint);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
  return doc;
}

ZetaDocument load_zeta(const std::string& path) {
  const json j = parse_file(path);
  ZetaDocument doc;
  if (auto it = j.find("name"); it != j.end() && it->is_string())
    doc.name = it->get<std::string>();

  const json& jq = field(j, path, "q");
  if (!jq.is_number_integer() || jq.get<std::int64_t>() < 2)
    throw input_error(path + ": field 'q' must be a prime power >= 2");
  const Int q = jq.get<std::int64_t>();

  Poly num = int_list(field(j, path, "numerator"), path, "numerator");
  Poly den = int_list(field(j, path, "denominator"), path, "denominator");
  try {
    doc.zeta = make_zeta(q, std::move(num), std::move(den));
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }

  if (auto it = j.find("eigenvalues"); it != j.end()) {
    if (!it->is_array())
      throw input_error(path + ": field 'eigenvalues' must be a list");
    doc.has_eigenvalues = true;
    for (std::size_t d = 0; d < it->size(); ++d) {
      const json& deg = (*it)[d];
      if (!deg.is_array())
        throw input_error(path + ": eigenvalues[" + std::to_string(d) +
                          "] must be a list of polynomials");
      std::vector<Poly> polys;
      for (const auto& p : deg)
        polys.push_back(int_list(p, path, "eigenvalues"));
      doc.eigenvalues.degrees.push_back(std::move(polys));
    }
  }
  return doc;
}

std::string homology_report_text(const std::string& space, HomologyEngine& H,
                                 bool with_generators) {
  std::ostringstream os;
  os << "space: " << space << "\n";
  for (int d = 0; d <= H.dims(); ++d) {
    const HomologyGroup& G = H.group(d);
    os << "H_" << d << ": betti " << G.betti;
    if (!G.torsion.empty()) os << ", torsion " << torsion_join(G.torsion);
    os << "\n";
    if (with_generators) {
      for (const Chain& g : G.generators) {
        os << "  generator:";
        for (const auto& [idx, c] : g) os << " " << c << "*s" << idx;
        os << "\n";
      }
    }
  }
  return os.str();
}

std::string homology_report_csv(const std::string& space, HomologyEngine& H) {
  std::ostringstream os;
  os << "space,degree,betti,torsion\n";
  for (int d = 0; d <= H.dims(); ++d) {
    const HomologyGroup& G = H.group(d);
    os << space << "," << d << "," << G.betti << "," << torsion_join(G.torsion)
       << "\n";
  }
  return os.str();
}

// ---- cache ------------------------------------------------------------------

std::string serialize_product(const ProductComplex& P) {
  std::ostringstream os;
  const SimplicialSet& X = *P.set;
  os << "symstab-complex 1\n";
  os << "arity " << P.arity << "\n";
  os << "dims " << X.dims() << "\n";
  os << "basepoint " << X.basepoint << "\n";
  os << "counts";
  for (std::int64_t c : X.counts) os << " " << c;
  os << "\n";
  for (int d = 0; d <= X.dims(); ++d) {
    os << "faces " << d;
    for (const SimplexRef& f : X.faces[d]) os << " " << f.index << " " << f.word;
    os << "\n";
  }
  for (std::size_t d = 0; d < P.tables.size(); ++d) {
    os << "table " << d << " " << P.tables[d].arity;
    for (std::uint64_t v : P.tables[d].flat) os << " " << v;
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

std::optional<ProductComplex> deserialize_product(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  int version = 0;
  if (!(in >> tok >> version) || tok != "symstab-complex" || version != 1)
    return std::nullopt;
  ProductComplex P;
  auto X = std::make_shared<SimplicialSet>();
  int dims = -1;
  if (!(in >> tok >> P.arity) || tok != "arity") return std::nullopt;
  if (!(in >> tok >> dims) || tok != "dims" || dims < 0) return std::nullopt;
  if (!(in >> tok >> X->basepoint) || tok != "basepoint") return std::nullopt;
  if (!(in >> tok) || tok != "counts") return std::nullopt;
  X->counts.resize(dims + 1);
  for (auto& c : X->counts)
    if (!(in >> c) || c < 0) return std::nullopt;
  X->faces.resize(dims + 1);
  for (int d = 0; d <= dims; ++d) {
    int dd = -1;
    if (!(in >> tok >> dd) || tok != "faces" || dd != d) return std::nullopt;
    // vertices store no faces
    X->faces[d].resize(d == 0 ? 0
                              : static_cast<std::size_t>(X->counts[d]) * (d + 1));
    for (SimplexRef& f : X->faces[d])
      if (!(in >> f.index >> f.word)) return std::nullopt;
  }
  P.tables.resize(dims + 1);
  for (int d = 0; d <= dims; ++d) {
    std::size_t dd = 0;
    if (!(in >> tok >> dd >> P.tables[d].arity) || tok != "table" ||
        dd != static_cast<std::size_t>(d) || P.tables[d].arity != P.arity)
      return std::nullopt;
    P.tables[d].flat.resize(static_cast<std::size_t>(X->counts[d]) * P.arity);
    for (std::uint64_t& v : P.tables[d].flat)
      if (!(in >> v)) return std::nullopt;
  }
  if (!(in >> tok) || tok != "end") return std::nullopt;
  try {
    validate(*X);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  P.set = std::move(X);
  return P;
}

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string cache_path(const std::string& dir, std::uint64_t key) {
  std::ostringstream os;
  os << dir << "/sym-" << std::hex << key << ".txt";
  return os.str();
}

}  // namespace

std::uint64_t sym_cache_key(const SimplicialSet& X, int n, int dim_cap) {
  ProductComplex P;
  P.set = std::make_shared<SimplicialSet>(X);
  P.arity = 1;
  P.tables.resize(X.counts.size());
  std::uint64_t h = fnv1a(serialize_product(P), 14695981039346656037ULL);
  h = fnv1a("n=" + std::to_string(n) + ";cap=" + std::to_string(dim_cap), h);
  return h;
}

std::string default_cache_dir() {
  const char* env = std::getenv("SYMSTAB_CACHE_DIR");
  return env ? env : "";
}

std::optional<ProductComplex> cache_lookup(const std::string& dir,
                                           std::uint64_t key) {
  std::ifstream in(cache_path(dir, key));
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // the entry records its own key; a mismatch means a stale or corrupt file
  const std::string header = "key " + std::to_string(key) + "\n";
  if (text.rfind(header, 0) != 0) return std::nullopt;
  return deserialize_product(text.substr(header.size()));
}

void cache_store(const std::string& dir, std::uint64_t key,
                 const ProductComplex& P) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::string path = cache_path(dir, key);
  std::ofstream out(path + ".tmp", std::ios::trunc);
  if (!out) return;  // caching is best-effort
  out << "key " << key << "\n" << serialize_product(P);
  out.close();
  std::filesystem::rename(path + ".tmp", path, ec);
}

ProductComplex cached_sym_power(SetPtr X, int n, const BuildOptions& opt,
                                const std::string& cache_dir) {
  if (cache_dir.empty()) return sym_power(X, n, opt);
  const std::uint64_t key = sym_cache_key(*X, n, opt.dim_cap);
  if (auto hit = cache_lookup(cache_dir, key)) return std::move(*hit);
  ProductComplex P = sym_power(X, n, opt);
  cache_store(cache_dir, key, P);
  return P;
}

}  // namespace symstab
