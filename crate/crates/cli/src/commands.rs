use anyhow::{bail, Context, Result};
use codescope_annotate::{AppState, ServiceConfig, Store};
use codescope_core::corpus::{mine_corpus, CorpusManifest, MineConfig};
use codescope_core::dataset::{
    self, classification_instances, gold_links, linking_instances, read_dataset, read_link_predictions,
    summarization_instances, write_link_predictions, LinkPrediction, MethodTable,
};
use codescope_core::encoder::{
    decode_link_target, is_summary_candidate, preprocess_comment, split_dataset, GroupKey, SplitSpec, Task,
};
use codescope_core::extractor::CommentKind;
use codescope_core::gold::read_gold;
use codescope_core::linkers::{train_forest, training_instances, ForestConfig, ForestModel, Linker};
use codescope_core::retrieval::{index_instances, snippet_token_set};
use codescope_core::schema::{self, Header};
use codescope_core::seed::stage_seed;
use serde::{Deserialize, Serialize};

use crate::{Engine, EncodeArgs, ExtractArgs, Grouping, LinkArgs, MineArgs, RetrieveArgs, ServeArgs};

pub fn mine(a: &MineArgs) -> Result<()> {
    let cfg = MineConfig {
        max_tokens: a.max_tokens,
        include_tests: a.include_tests,
    };
    let manifest = mine_corpus(&a.root, &cfg)?;
    log::info!(
        "mined {} methods from {} files; skipped {:?}",
        manifest.records.len(),
        manifest.files,
        manifest.skipped
    );
    manifest.write(&a.out)?;
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
struct CommentRow {
    method_id: String,
    comment_id: String,
    path: String,
    kind: CommentKind,
    start_line: usize,
    end_line: usize,
    trailing: bool,
    text: String,
    preprocessed: String,
    summary_candidate: bool,
}

pub fn extract(a: &ExtractArgs) -> Result<()> {
    let manifest = CorpusManifest::read(&a.manifest)?;
    let rows: Vec<CommentRow> = manifest
        .records
        .iter()
        .flat_map(|r| {
            r.comments.iter().map(|c| CommentRow {
                method_id: r.method_id.clone(),
                comment_id: c.id.clone(),
                path: r.path.clone(),
                kind: c.kind,
                start_line: c.start_line,
                end_line: c.end_line,
                trailing: c.trailing,
                text: c.text.clone(),
                preprocessed: preprocess_comment(&c.text),
                summary_candidate: is_summary_candidate(&c.text),
            })
        })
        .collect();
    log::info!("{} inner comments", rows.len());
    schema::write_jsonl(&a.out, &Header::new(schema::COMMENTS), &rows)?;
    Ok(())
}

fn forest_from_dataset(table: &MethodTable, path: &std::path::Path, config: &ForestConfig) -> Result<ForestModel> {
    let mut xs = Vec::new();
    for r in read_dataset(path)? {
        let i = &r.instance;
        if i.task != Task::Linking {
            bail!("{}: forest training needs a linking dataset", path.display());
        }
        let gold = decode_link_target(&i.target_text)
            .map_err(|_| anyhow::anyhow!("{}: bad target for {}", path.display(), i.comment_id))?;
        let (m, c) = table.comment(&i.method_id, &i.comment_id)?;
        xs.extend(training_instances(m, c, &gold));
    }
    log::info!("training forest on {} statements", xs.len());
    Ok(train_forest(&xs, config)?)
}

pub fn link(a: &LinkArgs, seed: u64) -> Result<()> {
    let manifest = CorpusManifest::read(&a.manifest)?;
    let table = MethodTable::from_manifest(&manifest);
    let linker = match a.engine {
        Engine::BlankLine => Linker::BlankLine,
        Engine::TokenSimilarity => {
            if !(0.0..=1.0).contains(&a.lambda) {
                bail!("--lambda must be within [0, 1]");
            }
            Linker::TokenSimilarity { lambda: a.lambda }
        }
        Engine::Forest => {
            let model = match (&a.model, &a.train) {
                (Some(p), _) => ForestModel::load(p)?,
                (None, Some(train)) => {
                    let cfg = ForestConfig {
                        n_trees: a.trees,
                        max_depth: a.max_depth,
                        seed: stage_seed(seed, "forest"),
                        ..ForestConfig::default()
                    };
                    let model = forest_from_dataset(&table, train, &cfg)?;
                    if let Some(out) = &a.save_model {
                        model.save(out)?;
                    }
                    model
                }
                (None, None) => bail!("the forest engine needs --model or --train"),
            };
            Linker::Forest(Box::new(model))
        }
    };

    let targets: Vec<(String, String)> = match &a.select {
        Some(p) => read_dataset(p)?
            .into_iter()
            .map(|r| (r.instance.method_id, r.instance.comment_id))
            .collect(),
        None => manifest
            .records
            .iter()
            .flat_map(|r| r.comments.iter().map(|c| (r.method_id.clone(), c.id.clone())))
            .collect(),
    };
    let mut preds = Vec::with_capacity(targets.len());
    for (mid, cid) in &targets {
        let (m, c) = table.comment(mid, cid)?;
        preds.push(LinkPrediction::new(mid, cid, linker.link(m, c)));
    }
    log::info!("{}: linked {} comments", linker.name(), preds.len());
    write_link_predictions(&a.out, &linker.name(), &preds)?;
    Ok(())
}

pub fn encode(a: &EncodeArgs, seed: u64) -> Result<()> {
    let manifest = CorpusManifest::read(&a.manifest)?;
    let table = MethodTable::from_manifest(&manifest);
    let gold = read_gold(&a.gold)?;
    let ratios: [f64; 3] = a
        .ratios
        .as_slice()
        .try_into()
        .context("--ratios takes three values")?;
    let group_key = match a.group {
        Grouping::File => GroupKey::File,
        Grouping::None => GroupKey::None,
    };

    let (links, link_table) = match &a.links {
        Some(p) => {
            let t = match &a.links_manifest {
                Some(m) => Some(MethodTable::from_manifest(&CorpusManifest::read(m)?)),
                None => None,
            };
            (read_link_predictions(p)?, t)
        }
        None => (gold_links(&gold), None),
    };
    let (summ, report) = summarization_instances(link_table.as_ref().unwrap_or(&table), &links, a.max_summary_tokens);
    log::info!("summarization: kept {}, skipped {:?}", report.kept, report.skipped);

    let datasets = [
        (Task::Classification, classification_instances(&table, &gold)?),
        (Task::Linking, linking_instances(&table, &gold)?),
        (Task::Summarization, summ),
    ];
    for (task, instances) in datasets {
        let n = instances.len();
        let task_seed = stage_seed(seed, &format!("split:{}", task.as_str()));
        let spec = SplitSpec {
            ratios,
            group_key,
            seed: task_seed,
        };
        let splits = split_dataset(instances, &spec).with_context(|| format!("splitting {} ({n} instances)", task.as_str()))?;
        let (tr, ev, te) = splits.sizes();
        log::info!("{}: {tr}/{ev}/{te}", task.as_str());
        dataset::write_splits(&a.out_dir, task, &splits, task_seed)?;
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SummaryPrediction {
    pub comment_id: String,
    pub predicted_summary: String,
    #[serde(default)]
    pub score: Option<f64>,
}

pub fn retrieve(a: &RetrieveArgs) -> Result<()> {
    let train: Vec<_> = read_dataset(&a.train)?.into_iter().map(|r| r.instance).collect();
    let test = read_dataset(&a.test)?;
    let index = index_instances(&train)?;
    let preds: Vec<SummaryPrediction> = test
        .iter()
        .map(|r| {
            let hit = index.retrieve(&snippet_token_set(&r.instance.input_text));
            SummaryPrediction {
                comment_id: r.instance.comment_id.clone(),
                predicted_summary: hit.summary.to_string(),
                score: Some(hit.score),
            }
        })
        .collect();
    log::info!("retrieved {} summaries from {} training snippets", preds.len(), index.len());
    schema::write_jsonl(
        &a.out,
        &Header::new(schema::SUMMARY_PREDICTIONS).with("method", "ir-jaccard"),
        &preds,
    )?;
    Ok(())
}

pub fn serve(a: &ServeArgs, seed: u64) -> Result<()> {
    let mut config = ServiceConfig::load(&a.config)?;
    if seed != 0 {
        config.seed = seed;
    }
    let manifest = a.manifest.as_deref().map(CorpusManifest::read).transpose()?;
    let store = Store::open(&a.store)?;
    log::info!("store holds {} tasks", store.tasks().count());
    let state = AppState::new(store, config, manifest);
    let rt = tokio::runtime::Runtime::new()?;
    rt.block_on(codescope_annotate::serve(&a.addr, state))?;
    Ok(())
}
