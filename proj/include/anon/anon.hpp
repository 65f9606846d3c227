#pragma once

#include "anon/binder.hpp"
#include "anon/corpus.hpp"
#include "anon/error.hpp"
#include "anon/eval/clone.hpp"
#include "anon/eval/fingerprint.hpp"
#include "anon/eval/report.hpp"
#include "anon/eval/search.hpp"
#include "anon/eval/terms.hpp"
#include "anon/golden.hpp"
#include "anon/lexer.hpp"
#include "anon/naming.hpp"
#include "anon/profile.hpp"
#include "anon/record.hpp"
#include "anon/transform.hpp"
