#include "pqsap/keyfiles.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pqsap/xof.hpp"

namespace pqsap {

namespace {

using FieldMap = std::map<std::string, std::string, std::less<>>;

[[noreturn]] void bad_file(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error(path.string() + ": " + what);
}

void write_fields(const std::filesystem::path& path, std::string_view format,
                  std::string_view params_id,
                  const std::vector<std::pair<std::string, Bytes>>& fields, bool restricted) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) bad_file(path, "cannot write");
  out << "format: " << format << '\n';
  out << "params: " << params_id << '\n';
  for (const auto& [name, value] : fields) {
    out << name << ": " << base64_encode(value) << '\n';
  }
  out.flush();
  if (!out) bad_file(path, "write failed");
  if (restricted) {
    std::filesystem::permissions(path,
                                 std::filesystem::perms::owner_read |
                                     std::filesystem::perms::owner_write,
                                 std::filesystem::perm_options::replace);
  }
}

struct ParsedFile {
  const ParamSet* params;
  FieldMap fields;
};

ParsedFile read_fields(const std::filesystem::path& path, std::string_view format) {
  std::ifstream in(path);
  if (!in) bad_file(path, "cannot open");
  FieldMap fields;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    size_t colon = line.find(": ");
    if (colon == std::string::npos) bad_file(path, "malformed line '" + line + "'");
    fields[line.substr(0, colon)] = line.substr(colon + 2);
  }
  auto fmt = fields.find("format");
  if (fmt == fields.end() || fmt->second != format) {
    bad_file(path, std::string("expected format ") + std::string(format));
  }
  auto params_it = fields.find("params");
  if (params_it == fields.end()) bad_file(path, "missing params");
  const ParamSet* p = find_params(params_it->second);
  if (p == nullptr) bad_file(path, "unknown parameter set '" + params_it->second + "'");
  return {p, std::move(fields)};
}

Bytes field_bytes(const std::filesystem::path& path, const ParsedFile& file,
                  const std::string& name, size_t expect_len) {
  auto it = file.fields.find(name);
  if (it == file.fields.end()) bad_file(path, "missing field '" + name + "'");
  Bytes value;
  try {
    value = base64_decode(it->second);
  } catch (const std::exception& e) {
    bad_file(path, "field '" + name + "': " + e.what());
  }
  if (value.size() != expect_len) bad_file(path, "field '" + name + "': wrong length");
  return value;
}

PkePublicKey field_pk(const std::filesystem::path& path, const ParsedFile& file,
                      const std::string& name) {
  Bytes raw = field_bytes(path, file, name, file.params->pk_bytes());
  try {
    return PkePublicKey::deserialize(raw, *file.params);
  } catch (const std::exception& e) {
    bad_file(path, "field '" + name + "': " + e.what());
  }
}

KemSecretKey assemble_kem_sk(const std::filesystem::path& path, const ParsedFile& file,
                             const std::string& secret_field, const std::string& z_field,
                             const PkePublicKey& pk) {
  Bytes raw = field_bytes(path, file, secret_field, file.params->pke_sk_bytes());
  KemSecretKey sk;
  try {
    sk.sk = PkeSecretKey::deserialize(raw, *file.params);
  } catch (const std::exception& e) {
    bad_file(path, "field '" + secret_field + "': " + e.what());
  }
  sk.z = field_bytes(path, file, z_field, kSeedBytes);
  sk.pk = pk;
  sk.pk_hash = sha3_256(pk.serialize(*file.params));
  return sk;
}

}  // namespace

void write_meta_file(const std::filesystem::path& path, const StealthMetaAddress& meta) {
  const ParamSet* p = find_params(meta.params_id);
  if (p == nullptr) throw std::invalid_argument("write_meta_file: unknown parameter set");
  write_fields(path, "pqsap-meta/1", meta.params_id,
               {{"K", meta.K.serialize(*p)}, {"V", meta.V.serialize(*p)}}, false);
}

StealthMetaAddress read_meta_file(const std::filesystem::path& path) {
  ParsedFile file = read_fields(path, "pqsap-meta/1");
  StealthMetaAddress meta;
  meta.params_id = std::string(file.params->name);
  meta.K = field_pk(path, file, "K");
  meta.V = field_pk(path, file, "V");
  return meta;
}

void write_recipient_keys(const std::filesystem::path& path, const RecipientKeys& keys) {
  const ParamSet* p = find_params(keys.params_id);
  if (p == nullptr) throw std::invalid_argument("write_recipient_keys: unknown parameter set");
  write_fields(path, "pqsap-keys/1", keys.params_id,
               {{"K", keys.spend.pk.serialize(*p)},
                {"V", keys.view.pk.serialize(*p)},
                {"k", keys.spend.sk.sk.serialize(*p)},
                {"z_k", keys.spend.sk.z},
                {"v", keys.view.sk.sk.serialize(*p)},
                {"z_v", keys.view.sk.z}},
               true);
}

RecipientKeys read_recipient_keys(const std::filesystem::path& path) {
  ParsedFile file = read_fields(path, "pqsap-keys/1");
  RecipientKeys keys;
  keys.params_id = std::string(file.params->name);
  keys.spend.pk = field_pk(path, file, "K");
  keys.view.pk = field_pk(path, file, "V");
  keys.spend.sk = assemble_kem_sk(path, file, "k", "z_k", keys.spend.pk);
  keys.view.sk = assemble_kem_sk(path, file, "v", "z_v", keys.view.pk);
  return keys;
}

void write_viewing_key(const std::filesystem::path& path, const ViewingKey& key) {
  const ParamSet* p = find_params(key.params_id);
  if (p == nullptr) throw std::invalid_argument("write_viewing_key: unknown parameter set");
  write_fields(path, "pqsap-viewing/1", key.params_id,
               {{"K", key.K.serialize(*p)},
                {"V", key.view.pk.serialize(*p)},
                {"v", key.view.sk.serialize(*p)},
                {"z_v", key.view.z}},
               true);
}

ViewingKey read_viewing_key(const std::filesystem::path& path) {
  ParsedFile file = read_fields(path, "pqsap-viewing/1");
  ViewingKey key;
  key.params_id = std::string(file.params->name);
  key.K = field_pk(path, file, "K");
  PkePublicKey view_pk = field_pk(path, file, "V");
  key.view = assemble_kem_sk(path, file, "v", "z_v", view_pk);
  return key;
}

}  // namespace pqsap
