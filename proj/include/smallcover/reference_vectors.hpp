#pragma once

// Reference characteristic vectors for the 120-cell census (hex encoding,
// one character per facet).  Entries 1..56 are the orientable class
// representatives, 57..58 the non-orientable eight-colouring ones, 59 the
// five-colouring vector and 60 the nine-colouring vector.

namespace smallcover {

inline constexpr const char* kReferenceVectors[60] = {
    "1248284bee77dd1eed4727284bd1b482b77d41b2db111d28e8728e481d8db4e41e8e28ebeb72b11b4d7777d412b887b2e41d7bdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4727284bd1b482b77d41b2db111d2e8e72e8481d8db48418ee2e8beb72b11b4d7777d412b887b2e41d7bdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4727284bb1d482b77d41d2bb111b28e8728e481d8dd4e41e8e28ebeb72b11d4b7777d412b887b2e41b7ddd4e2e2448d2eb1187",
    "1248284bee77dd1eed4727284bb1d482b77d41d2bb111b2e8e72e8481d8dd48418ee2e8beb72b11d4b7777d412b887b2e41b7ddd4e2e2448d2eb1187",
    "1248284bee77dd1eed4747282bd1b482b77d21b4db111d28e8748e481d8db4e21e8e28ebeb74b11b2d7777d212b887b4e41d7bdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4747282bd1b482b77d21b4db111d2e8e74e8481d8db48218ee2e8beb74b11b2d7777d212b887b4e41d7bdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4747282bd1b482b77d21b4db111d28e8748e481d8db4e21e8e28ebeb74b11b2d7777d212b887b4e41d7bdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4747282bd1b482b77d21b4db111d2e8e74e8481d8db48218ee2e8beb74b11b2d7777d212b887b4e41d7bdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4e17287bd8b482be7d71b1db118d24247142488d8db427124e242bebe1b18b7d7e77d782b887b1e41debdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4e17287bb8d482be7d71d1bb118b22427124488d8dd447142e224bebe1b18d7b7e77d782b887b1e41beddd4e2e2448d2eb1187",
    "1248284bee77dd1eed4e17287bb8d482be7d71d1bb118b24247142488d8dd427124e242bebe1b18d7b7e77d782b887b1e41beddd4e2e2448d2eb1187",
    "1248284bee77dd1eed4e77281bd8b482be7d11b7db118d22427724488d8db441142e224bebe7b18b1d7e77d182b887b7e41debdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4e77281bd8b482be7d11b7db118d24247742488d8db421124e242bebe7b18b1d7e77d182b887b7e41debdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4e77281bb8d482be7d11d7bb118b22427724488d8dd441142e224bebe7b18d1b7e77d182b887b7e41beddd4e2e2448d2eb1187",
    "1248284bee77dd1eed4127284bd7b482b17d41b2db117d2e8e72e8487d8db48418ee2e8beb12b17b4d7177d472b887b2e41d1bdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4127284bb7d482b17d41d2bb117b28e8728e487d8dd4e41e8e28ebeb12b17d4b7177d472b887b2e41b1ddd4e2e2448d2eb1187",
    "1248284bee77dd1eed4127284bb7d482b17d41d2bb117b2e8e72e8487d8dd48418ee2e8beb12b17d4b7177d472b887b2e41b1ddd4e2e2448d2eb1187",
    "1248284bee77dd1eed4147282bd7b482b17d21b4db117d28e8748e487d8db4e21e8e28ebeb14b17b2d7177d272b887b4e41d1bdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4147282bd7b482b17d21b4db117d2e8e74e8487d8db48218ee2e8beb14b17b2d7177d272b887b4e41d1bdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4147282bb7d482b17d21d4bb117b28e8748e487d8dd4e21e8e28ebeb14b17d2b7177d272b887b4e41b1ddd4e2e2448d2eb1187",
    "1248284bee77dd1eed4147282bb7d482b17d21d4bb117b2e8e74e8487d8dd48218ee2e8beb14b17d2b7177d272b887b4e41b1ddd4e2e2448d2eb1187",
    "1248284bee77dd1eed4817287bdeb482b87d71b1db11ed2242712448ed8db447142e224beb81b1eb7d7877d7e2b887b1e41d8bdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4817287bbed482b87d71d1bb11eb2242712448ed8dd447142e224beb81b1ed7b7877d7e2b887b1e41b8ddd4e2e2448d2eb1187",
    "1248284bee77dd1eed4817287bbed482b87d71d1bb11eb2424714248ed8dd427124e242beb81b1ed7b7877d7e2b887b1e41b8ddd4e2e2448d2eb1187",
    "1248284bee77dd1eed4877281bdeb482b87d11b7db11ed2242772448ed8db441142e224beb87b1eb1d7877d1e2b887b7e41d8bdd4e2e2448d2eb1187",
    "1248284bee77dd1eed4877281bbed482b87d11d7bb11eb2242772448ed8dd441142e224beb87b1ed1b7877d1e2b887b7e41b8ddd4e2e2448d2eb1187",
    "1248284bee77dd7eed4721284bd1b482b71d47b2db111d28e8128e481d8db4e47e8e28ebeb72b71b4d1777d412b881b2e47d7bdd4e2e2448d2eb1187",
    "1248284bee77dd7eed4721284bd1b482b71d47b2db111d2e8e12e8481d8db48478ee2e8beb72b71b4d1777d412b881b2e47d7bdd4e2e2448d2eb1187",
    "1248284bee77dd7eed4721284bb1d482b71d47d2bb111b2e8e12e8481d8dd48478ee2e8beb72b71d4b1777d412b881b2e47b7ddd4e2e2448d2eb1187",
    "1248284bee77dd7eed4e11287bd8b482be1d77b1db118d22421124488d8db447742e224bebe1b78b7d1e77d782b881b1e47debdd4e2e2448d2eb1187",
    "1248284bee77dd7eed4e11287bd8b482be1d77b1db118d24241142488d8db427724e242bebe1b78b7d1e77d782b881b1e47debdd4e2e2448d2eb1187",
    "1248284bee77dd7eed4e11287bb8d482be1d77d1bb118b22421124488d8dd447742e224bebe1b78d7b1e77d782b881b1e47beddd4e2e2448d2eb1187",
    "1248284bee77dd7eed4e71281bb8d482be1d17d7bb118b22421724488d8dd441742e224bebe7b78d1b1e77d182b881b7e47beddd4e2e2448d2eb1187",
    "1248284bee77dd7eed4121284bd7b482b11d47b2db117d2e8e12e8487d8db48478ee2e8beb12b77b4d1177d472b881b2e47d1bdd4e2e2448d2eb1187",
    "1248284bee77dd7eed4121284bb7d482b11d47d2bb117b2e8e12e8487d8dd48478ee2e8beb12b77d4b1177d472b881b2e47b1ddd4e2e2448d2eb1187",
    "1248284bee77dd7eed4141282bd7b482b11d27b4db117d28e8148e487d8db4e27e8e28ebeb14b77b2d1177d272b881b4e47d1bdd4e2e2448d2eb1187",
    "1248284bee77dd7eed4141282bd7b482b11d27b4db117d2e8e14e8487d8db48278ee2e8beb14b77b2d1177d272b881b4e47d1bdd4e2e2448d2eb1187",
    "1248284bee77dd7eed4141282bb7d482b11d27d4bb117b28e8148e487d8dd4e27e8e28ebeb14b77d2b1177d272b881b4e47b1ddd4e2e2448d2eb1187",
    "1248284bee77dd7eed4141282bb7d482b11d27d4bb117b2e8e14e8487d8dd48278ee2e8beb14b77d2b1177d272b881b4e47b1ddd4e2e2448d2eb1187",
    "1248284bee77dd7eed4811287bbed482b81d77d1bb11eb2424114248ed8dd427724e242beb81b7ed7b1877d7e2b881b1e47b8ddd4e2e2448d2eb1187",
    "1248284bee77dd7eed4871281bdeb482b81d17b7db11ed2242172448ed8db441742e224beb87b7eb1d1877d1e2b881b7e47d8bdd4e2e2448d2eb1187",
    "1248284bee77dd7eed4871281bdeb482b81d17b7db11ed2424174248ed8db421724e242beb87b7eb1d1877d1e2b881b7e47d8bdd4e2e2448d2eb1187",
    "1248284bee77dd7eed4871281bbed482b81d17d7bb11eb2242172448ed8dd441742e224beb87b7ed1b1877d1e2b881b7e47b8ddd4e2e2448d2eb1187",
    "1248284bee77db1eed4727284dd1b482b77b41b2dd111d2e8e72e8481b8db48418ee2e8bed72d11b4d7777b412b887d2e41d7bbd4e2e2448d2eb1187",
    "1248284bee77db1eed4e17287dd8b482be7b71b1dd118d22427124488b8db447142e224bede1d18b7d7e77b782b887d1e41debbd4e2e2448d2eb1187",
    "1248284bee77db1eed4e17287dd8b482be7b71b1dd118d24247142488b8db427124e242bede1d18b7d7e77b782b887d1e41debbd4e2e2448d2eb1187",
    "1248284bee77db1eed4e17287db8d482be7b71d1bd118b22427124488b8dd447142e224bede1d18d7b7e77b782b887d1e41bedbd4e2e2448d2eb1187",
    "1248284bee77db1eed4127284dd7b482b17b41b2dd117d2e8e72e8487b8db48418ee2e8bed12d17b4d7177b472b887d2e41d1bbd4e2e2448d2eb1187",
    "1248284bee77db1eed4817287dbed482b87b71d1bd11eb2242712448eb8dd447142e224bed81d1ed7b7877b7e2b887d1e41b8dbd4e2e2448d2eb1187",
    "1248284bee77db1eed4877281dbed482b87b11d7bd11eb2424774248eb8dd421124e242bed87d1ed1b7877b1e2b887d7e41b8dbd4e2e2448d2eb1187",
    "1248284bee77db7eed4721284db1d482b71b47d2bd111b2e8e12e8481b8dd48478ee2e8bed72d71d4b1777b412b881d2e47b7dbd4e2e2448d2eb1187",
    "1248284bee77db7eed4741282db1d482b71b27d4bd111b28e8148e481b8dd4e27e8e28ebed74d71d2b1777b212b881d4e47b7dbd4e2e2448d2eb1187",
    "1248284bee77db7eed4e11287dd8b482be1b77b1dd118d24241142488b8db427724e242bede1d78b7d1e77b782b881d1e47debbd4e2e2448d2eb1187",
    "1248284bee77db7eed4121284db7d482b11b47d2bd117b2e8e12e8487b8dd48478ee2e8bed12d77d4b1177b472b881d2e47b1dbd4e2e2448d2eb1187",
    "124828eed4bb7bde4872b1248d771e8d21b8d7bd27111d2e4e21e448d17e784b84e2ee44db7721b871dbbbd18d2e4712e8bbdd787242e887442d11eb",
    "12482d48be77e1bebe4d2d2d471b74828dd14b721711b128e8d28e4db18e74e4be8b28e8e7d27bb741dd7714b28d8d72b4b1d71e4e2b244de2e81187",
    "1248285e4ee9351324e1e21181e911481e9e5e82384245e395511e9e33195e31559e9e191335e9e328e4248e1e42315811219e1184184224e5839ee1",
    "124827b8fff4217d2f8f1d11bf11b811b4f7fbfdd47278fd8417f1fb2d418fd7148bf1f14d2f7f4ddfb72741f8f2d71b11db11fb1187422f8b824ff1",
    "12482848fff421822f8f12114f11481144f8f4f2248288f28418f1f422418f281484f1f1422f8f422f482841f8f22814112411f41188422f84824ff1",
    "12482848fff421822f8f12114f11481144f8f4f2248289e39519e1e533519e391595e1e1533f8f422f482841f8f22814112411f41188422f84824ff1",
};

}  // namespace smallcover
