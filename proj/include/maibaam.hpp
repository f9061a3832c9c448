#ifndef MAIBAAM_HPP
#define MAIBAAM_HPP

#include "maibaam/catalog.hpp"
#include "maibaam/cli.hpp"
#include "maibaam/config.hpp"
#include "maibaam/conllu.hpp"
#include "maibaam/diagnostic.hpp"
#include "maibaam/lexicon.hpp"
#include "maibaam/lint.hpp"
#include "maibaam/metadata.hpp"
#include "maibaam/report.hpp"
#include "maibaam/rules.hpp"
#include "maibaam/stats.hpp"
#include "maibaam/text.hpp"
#include "maibaam/tokenizer.hpp"
#include "maibaam/tree.hpp"
#include "maibaam/version.hpp"

#endif  // MAIBAAM_HPP
