// Wire types of the portal JSON API.

export interface LexiconEntry {
  term: string;
  language: string;
  kind: string;
  weight: number;
}

export interface ConceptTreeNode {
  id: string;
  label: string;
  parent: string | null;
  lexicon: LexiconEntry[];
  children: ConceptTreeNode[];
}

export interface InstanceRecord {
  id: string;
  conceptId: string;
  attributes: Record<string, string>;
}

export interface ConceptContribution {
  conceptId: string;
  weight: number;
  matchCount: number;
}

export interface CategorizationResult {
  documentId: string;
  matchedConcepts: ConceptContribution[];
  score: number;
  threshold: number;
  relevant: boolean;
}

export interface ArticleRecord {
  documentId: string;
  title: string;
  sourceUrl: string | null;
  ingestedAt: string;
  result: CategorizationResult;
}

export interface ArticlePage {
  items: ArticleRecord[];
  total: number;
  offset: number;
  limit: number;
}

export interface CategorizeDraft {
  title: string;
  abstractText: string;
  keywords: string[];
  threshold?: number;
}
