#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <string>

#include "pqsap/bytes.hpp"
#include "pqsap/xof.hpp"

using namespace pqsap;

namespace {

Bytes ascii(const std::string& s) { return Bytes(s.begin(), s.end()); }

// 1000 bytes of i mod 251: long enough to cross every sponge rate boundary.
Bytes long_input() {
  Bytes out(1000);
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<uint8_t>(i % 251);
  return out;
}

Bytes counting_bytes(size_t n) {
  Bytes out(n);
  std::iota(out.begin(), out.end(), uint8_t{0});
  return out;
}

}  // namespace

TEST_CASE("sha3_256 known answers") {
  CHECK(hex_encode(sha3_256(Bytes{})) ==
        "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
  CHECK(hex_encode(sha3_256(ascii("abc"))) ==
        "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532");
  CHECK(hex_encode(sha3_256(long_input())) ==
        "48e66a01861d0eadaacdb7a6ae7db6b9ac79242ecced4154a9fbb33c4e3cc571");
  CHECK(hex_encode(sha3_256(counting_bytes(135))) ==
        hex_encode(sha3_256(counting_bytes(135))));
}

TEST_CASE("sha3_512 known answers") {
  CHECK(hex_encode(sha3_512(Bytes{})) ==
        "a69f73cca23a9ac5c8b567dc185a756e97c982164fe25859e0d1dcc1475c80a615b2123af1f5f94c11e3e"
        "9402c3ac558f500199d95b6d3e301758586281dcd26");
  CHECK(hex_encode(sha3_512(ascii("abc"))) ==
        "b751850b1a57168a5693cd924b6b096e08f621827444f70d884f5d0240d2712e10e116e9192af3c91a7ec"
        "57647e3934057340b4cf408d5a56592f8274eec53f0");
  CHECK(hex_encode(sha3_512(long_input())) ==
        "b8030d306ae990bc794bfb3a6100f67851889d6c272257afac7d1077a18660d6ea8d0da5d2299c3ebaa0d"
        "34baf62cc58ac1fd4476506cf512a4897bb083a6fc4");
}

TEST_CASE("sha256 known answers including block boundaries") {
  CHECK(hex_encode(sha256(Bytes{})) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(hex_encode(sha256(ascii("abc"))) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(hex_encode(sha256(long_input())) ==
        "4e4c294b331f7a2099a379bec34b9f9fc03dc46ab465d998f4d683da53487e6d");
  // lengths around the 64-byte block and the 56-byte length-field threshold
  CHECK(hex_encode(sha256(counting_bytes(55))) ==
        "463eb28e72f82e0a96c0a4cc53690c571281131f672aa229e0d45ae59b598b59");
  CHECK(hex_encode(sha256(counting_bytes(56))) ==
        "da2ae4d6b36748f2a318f23e7ab1dfdf45acdc9d049bd80e59de82a60895f562");
  CHECK(hex_encode(sha256(counting_bytes(64))) ==
        "fdeab9acf3710362bd2658cdc9a29e8f9c757fcf9811603a8c447cd1d9151108");
  CHECK(hex_encode(sha256(counting_bytes(65))) ==
        "4bfd2c8b6f1eec7a2afeb48b934ee4b2694182027e6d0fc075074f2fabb31781");
}

TEST_CASE("shake128 known answers") {
  CHECK(hex_encode(shake128(Bytes{}, 32)) ==
        "7f9c2ba4e88f827d616045507605853ed73b8093f6efbc88eb1a6eacfa66ef26");
  CHECK(hex_encode(shake128(ascii("abc"), 32)) ==
        "5881092dd818bf5cf8a3ddb793fbcba74097d5c526a6d35f97b83351940f2cc8");
  CHECK(hex_encode(shake128(long_input(), 48)) ==
        "a72440f7f5aa7c14c8e0187420611da7e2ba62f5bb2e88a91b9c9448cac30078cc321c13735bc6799f955"
        "dea38f17135");
}

TEST_CASE("shake128 long squeeze crosses permutation boundaries correctly") {
  const char* expected =
      "066a361dc675f856cecdc02b25218a10cec0cecf79859ec0fec3d409e5847a92ba9d4e33d16a3a44cc39b1bd"
      "d205b41ba54309172b81078a46b4100571f222086fd89eb089deaf90bf6fbc7d22b3457789f97d11218a0edc"
      "fe8d1319a3e6b458dfc55e49af14d2ea120935e76e56c7cf6b13929967b9df8e62ff11dc05a3fafc979714ce"
      "921a9f7aabbbca3f2752beb94f3d7e3d55a47194b3d9abba6b4874acaf6ae5d7356d654213071de621a38796"
      "d611214bb9eb72c2770d5acc76c07eaae3e2ddea6bc8f41bc40514f17602396153ee8e668c282195f0b75a4e"
      "d1487e0965228314bebeebf7cc91d91f18931a755a4bd4aeab89210a055cec69c0f86778781f4751c33d6a37"
      "61351f08102a7db95914893a276d3877087e05db7634cd0a54a0d727dc11d4bcae65d9c9835f4d5ccc6e8380"
      "b2ebe90e661ddd963f16a5415b4a34bf0d32bbf7453b4ff972499d594707219207e63b4586c4113642ebcc80"
      "f08c685a0f779e7d6744916b8f0160cb2fef343f42bf1d51fa427cb07e658337838b57ddef5afdc73a492499"
      "8944fc0b";
  CHECK(hex_encode(shake128(counting_bytes(32), 400)) == expected);
}

TEST_CASE("XofStream with no tags equals one-shot shake128") {
  const Bytes seed = counting_bytes(32);
  XofStream stream(seed);
  CHECK(stream.read(400) == shake128(seed, 400));
}

TEST_CASE("XofStream incremental reads equal one contiguous read") {
  const Bytes seed = counting_bytes(32);
  XofStream whole(seed, Domain::Matrix);
  const Bytes expected = whole.read(500);

  XofStream pieces(seed, Domain::Matrix);
  Bytes got;
  for (size_t chunk : {1u, 7u, 13u, 100u, 167u, 168u, 44u}) {
    Bytes part = pieces.read(chunk);
    got.insert(got.end(), part.begin(), part.end());
  }
  CHECK(got == expected);
}

TEST_CASE("XofStream is deterministic and seed-sensitive") {
  Bytes seed1(32, 0xaa);
  Bytes seed2(32, 0xab);
  CHECK(XofStream(seed1, Domain::Matrix).read(64) == XofStream(seed1, Domain::Matrix).read(64));
  CHECK(XofStream(seed1, Domain::Matrix).read(64) != XofStream(seed2, Domain::Matrix).read(64));
}

TEST_CASE("domain tags separate streams") {
  Bytes seed(32, 0x42);
  CHECK(XofStream(seed, Domain::Matrix).read(64) !=
        XofStream(seed, Domain::KeygenSecret).read(64));
  CHECK(XofStream(seed, Domain::KeygenSecret).read(64) !=
        XofStream(seed, Domain::KeygenError).read(64));
  CHECK(XofStream(seed, Domain::Matrix, 0).read(64) != XofStream(seed, Domain::Matrix, 1).read(64));
  CHECK(XofStream(seed, Domain::Matrix, 1).read(64) !=
        XofStream(seed, Domain::Matrix, 256).read(64));
  // the index is encoded separately from the tag, not concatenated ambiguously
  CHECK(XofStream(seed, Domain::Matrix, 0).read(64) != XofStream(seed, Domain::Matrix).read(64));
}

TEST_CASE("two-argument hash overloads equal concatenation") {
  Bytes a(17, 0x01);
  Bytes b(40, 0x02);
  CHECK(sha3_256(a, b) == sha3_256(concat(a, b)));
  CHECK(sha3_512(a, b) == sha3_512(concat(a, b)));
}

TEST_CASE("megabyte stream is stable across reads") {
  Bytes seed(32, 0x77);
  XofStream one(seed, Domain::Synth);
  XofStream two(seed, Domain::Synth);
  Bytes big = one.read(1'000'000);
  Bytes first = two.read(999'999);
  Bytes last = two.read(1);
  CHECK(std::equal(first.begin(), first.end(), big.begin()));
  CHECK(big.back() == last[0]);
  CHECK(sha256(big) == sha256(big));
}
